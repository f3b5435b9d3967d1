#include "cli.hpp"

#include "report_json.hpp"

#include "ordbraid/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace ordbraid::cli {

namespace {

std::vector<std::size_t> parse_sequence(const std::string &text)
{
	std::vector<std::size_t> seq;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ',')) {
		auto first = item.find_first_not_of(" \t");
		if (first == std::string::npos)
			continue;
		auto last = item.find_last_not_of(" \t");
		auto token = item.substr(first, last - first + 1);
		if (token.find_first_not_of("0123456789") != std::string::npos)
			throw InputError("bad mutation direction '" + token + "'");
		seq.push_back(std::stoul(token));
	}
	return seq;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Dehornoy order, cluster mutation and braid-closure invariants", "ordbraid"};
	app.require_subcommand(1);
	app.fallthrough();

	std::string out_file;
	app.add_option("--out", out_file, "Write the result to FILE instead of standard output");

	int strands = 0;
	std::string word, word_b, surface, sequence, check = "laurent";
	std::size_t depth = 0, max_len = 0;
	long m = 0;

	// `action` produces the document to print; set by the chosen subcommand
	std::function<std::string()> action;
	auto json_action = [&](auto make) {
		return [make]() { return make().dump(2) + "\n"; };
	};

	auto add_word_command = [&](const std::string &name, const std::string &help) {
		auto *sub = app.add_subcommand(name, help);
		sub->add_option("--strands", strands, "Number of strands")->required()->check(CLI::Range(2, 64));
		sub->add_option("word", word, "Braid word, e.g. \"1 -2 1\"")->required();
		return sub;
	};

	auto *sign = add_word_command("sign", "Dehornoy sign of a braid");
	sign->callback([&] {
		action = json_action([&] {
			auto b = parse_braid(word, strands);
			return sign_json(b, dehornoy_sign(b));
		});
	});

	auto *compare = add_word_command("compare", "Compare two braids in the Dehornoy order");
	compare->add_option("other", word_b, "Second braid word")->required();
	compare->callback([&] {
		action = json_action([&] {
			auto a = parse_braid(word, strands);
			auto b = parse_braid(word_b, strands);
			return compare_json(a, b, dehornoy_compare(a, b));
		});
	});

	auto *nf = add_word_command("normal-form", "Garside normal form and positive decomposition");
	nf->callback([&] {
		action = json_action([&] { return normal_form_json(parse_braid(word, strands)); });
	});

	auto *jones_cmd = add_word_command("jones", "Jones polynomial of the braid closure");
	jones_cmd->callback([&] {
		action = json_action([&] {
			auto b = parse_braid(word, strands);
			return invariant_json(b, jones(b));
		});
	});

	auto *homfly_cmd = add_word_command("homfly", "HOMFLY polynomial of the braid closure");
	homfly_cmd->callback([&] {
		action = json_action([&] {
			auto b = parse_braid(word, strands);
			return invariant_json(b, homfly(b));
		});
	});

	auto *invariant = add_word_command("invariant", "Surface invariant: (0,2) -> Jones, (1,1) -> HOMFLY");
	invariant->add_option("--surface", surface, "0,2 or 1,1")->required();
	invariant->callback([&] {
		action = json_action([&] {
			auto b = parse_braid(word, strands);
			auto j = invariant_json(b, braid_to_laurent(b, parse_surface_type(surface)));
			j["surface"] = surface;
			return j;
		});
	});

	auto *cluster = app.add_subcommand("cluster", "Cluster seeds of surface presets");
	cluster->require_subcommand(1);
	auto *mutate_cmd = cluster->add_subcommand("mutate", "Mutate a preset seed along a sequence");
	mutate_cmd->add_option("--surface", surface, "torus-1 or annulus-2")->required();
	mutate_cmd->add_option("--seq", sequence, "Comma separated 1-based directions")->required();
	mutate_cmd->callback([&] {
		action = json_action([&] {
			auto seed = surface_preset(surface);
			auto trace = mutate_sequence(seed, surface, parse_sequence(sequence));
			return seed_json(surface, trace);
		});
	});
	auto *audit_cmd = cluster->add_subcommand("audit", "Laurent / positivity audit of a preset");
	audit_cmd->add_option("--surface", surface, "torus-1 or annulus-2")->required();
	audit_cmd->add_option("--depth", depth, "Maximal mutation sequence length")->required();
	audit_cmd->add_option("--check", check, "laurent or positivity")
	    ->check(CLI::IsMember({"laurent", "positivity"}));
	audit_cmd->callback([&] {
		action = json_action([&] {
			auto seed = surface_preset(surface);
			auto report = check == "positivity" ? positivity_audit(seed, depth) : laurent_audit(seed, depth);
			return audit_json(surface, report);
		});
	});

	auto *experiment = app.add_subcommand("experiment", "Experiments");
	experiment->require_subcommand(1);
	auto *order_pos = experiment->add_subcommand("order-positivity",
	                                             "Dehornoy sign against coefficient positivity");
	order_pos->add_option("--strands", strands, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
	order_pos->add_option("--max-len", max_len, "Maximal word length")->required();
	order_pos->callback([&] {
		action = json_action([&] { return experiment_json(experiment_order_positivity(strands, max_len)); });
	});

	auto *lo_dim = app.add_subcommand("lo-dim", "Ambient dimension of LO(F_m)");
	lo_dim->add_option("m", m, "Rank of the free group")->required();
	lo_dim->callback([&] {
		action = [&] { return std::to_string(lo_dimension(m)) + "\n"; };
	});

	// CLI11 wants argv order reversed
	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try {
		app.parse(reversed);
	} catch (const CLI::CallForHelp &) {
		out << app.help();
		return kOk;
	} catch (const CLI::CallForAllHelp &) {
		out << app.help("", CLI::AppFormatMode::All);
		return kOk;
	} catch (const CLI::ParseError &e) {
		err << "error: " << e.what() << "\n";
		return kBadArguments;
	}

	std::string document;
	try {
		document = action();
	} catch (const InputError &e) {
		err << "error: " << e.what() << "\n";
		return kBadArguments;
	} catch (const MismatchError &e) {
		err << "error: " << e.what() << "\n";
		return kBadArguments;
	} catch (const std::exception &e) {
		err << "computation error: " << e.what() << "\n";
		return kComputationError;
	}

	if (out_file.empty()) {
		out << document;
	} else {
		std::ofstream file(out_file, std::ios::binary);
		if (!(file << document)) {
			err << "error: cannot write " << out_file << "\n";
			return kComputationError;
		}
	}
	return kOk;
}

} // namespace ordbraid::cli
