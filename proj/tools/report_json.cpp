#include "report_json.hpp"

namespace ordbraid::cli {

namespace {

Json header()
{
	Json j;
	j["schema"] = kSchemaVersion;
	return j;
}

} // namespace

Json sign_json(const BraidWord &b, const DehornoySign &s)
{
	Json j = header();
	j["strands"] = b.strands();
	j["braid"] = b.text();
	j["verdict"] = to_string(s.verdict);
	j["witness"] = s.witness.text();
	return j;
}

Json compare_json(const BraidWord &a, const BraidWord &b, Relation r)
{
	Json j = header();
	j["strands"] = a.strands();
	j["a"] = a.text();
	j["b"] = b.text();
	j["relation"] = to_string(r);
	return j;
}

Json normal_form_json(const BraidWord &b)
{
	auto nf = garside_normal_form(b);
	auto [lhs, rhs] = positive_decompose(b);
	Json j = header();
	j["strands"] = b.strands();
	j["braid"] = b.text();
	j["delta_power"] = nf.delta_power;
	Json factors = Json::array();
	for (const auto &f : nf.factors)
		factors.push_back(simple_braid_word(b.strands(), f).text());
	j["factors"] = std::move(factors);
	j["positive_lhs"] = lhs.text();
	j["positive_rhs"] = rhs.text();
	j["handle_reduced"] = handle_reduce(b).text();
	return j;
}

Json invariant_json(const BraidWord &b, const InvariantValue &v)
{
	auto d = braid_closure(b);
	Json j = header();
	j["kind"] = to_string(v.kind);
	j["strands"] = b.strands();
	j["braid"] = b.text();
	j["poly"] = canonical_text(v.poly);
	j["writhe"] = writhe(d);
	j["components"] = d.component_count;
	return j;
}

Json seed_json(std::string_view surface, const MutationTrace &trace)
{
	const Seed &s = trace.seeds.back();
	Json j = header();
	j["surface"] = surface;
	j["sequence"] = trace.directions;
	Json vars = Json::array();
	for (const auto &v : s.variables)
		vars.push_back(canonical_text(v));
	j["variables"] = std::move(vars);
	j["matrix"] = s.matrix.entries();
	return j;
}

Json audit_json(std::string_view surface, const AuditReport &r)
{
	Json j = header();
	j["surface"] = surface;
	j["depth"] = r.depth;
	j["check"] = r.check_positivity ? "positivity" : "laurent";
	j["explored"] = r.explored;
	j["distinct_variables"] = r.distinct_variables.size();
	j["variables"] = r.distinct_variables;
	Json failures = Json::array();
	for (const auto &f : r.failures) {
		Json e;
		e["path"] = f.path;
		e["reason"] = f.reason;
		failures.push_back(std::move(e));
	}
	j["failures"] = std::move(failures);
	j["passed"] = r.passed();
	return j;
}

Json experiment_json(const ExperimentReport &r)
{
	Json j = header();
	Json params;
	params["strands"] = r.strands;
	params["max_len"] = r.max_len;
	params["surface"] = to_string(r.surface);
	params["invariant"] = r.strands == 2 ? "jones" : "homfly";
	j["parameters"] = std::move(params);

	Json records = Json::array();
	for (const auto &rec : r.records) {
		Json e;
		e["braid"] = rec.braid;
		e["strands"] = rec.strands;
		e["dehornoy"] = to_string(rec.dehornoy);
		e["invariant_kind"] = to_string(rec.invariant_kind);
		e["poly"] = rec.poly;
		e["all_coefficients_positive"] = rec.all_coefficients_positive;
		records.push_back(std::move(e));
	}
	j["records"] = std::move(records);

	Json summary;
	for (Verdict v : {Verdict::Positive, Verdict::Negative, Verdict::Identity}) {
		const auto &cell = r.summary[verdict_slot(v)];
		Json row;
		row["positive"] = cell[1];
		row["not_positive"] = cell[0];
		summary[std::string(to_string(v))] = std::move(row);
	}
	j["summary"] = std::move(summary);
	return j;
}

} // namespace ordbraid::cli
