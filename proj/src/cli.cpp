#include "eireg/cli.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "eireg/io.hpp"

namespace eireg::cli {

namespace {

std::string tuple_text(const std::vector<int>& values) {
  std::string out = "(";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(values[k]);
  }
  return out + ")";
}

void print_trace(const PhiTrace& trace, std::ostream& out) {
  const auto t = trace.t_prefix();
  out << "runners=" << trace.before.runners() << " i=" << trace.s_list.size() << '\n'
      << "s1=" << trace.s1 << '\n'
      << "s=" << tuple_text(trace.s_list) << '\n'
      << "x=" << tuple_text(trace.x_list) << '\n'
      << "b=" << tuple_text(trace.b_list) << '\n'
      << "t=" << tuple_text(std::vector<int>(t.begin(), t.end())) << '\n'
      << "c=" << trace.c << '\n'
      << "before:\n"
      << render_abacus(trace.before) << "after:\n"
      << render_abacus(trace.after)
      << "result=" << format_partition(partition_from_abacus(trace.after)) << '\n';
}

struct Options {
  std::string partition;
  int n = 0;
  int e = 0;
  int i = 0;
  std::optional<int> beads;
  bool json = false;
  bool steps = false;
  bool all_i = false;
  bool up_to = false;
  unsigned workers = 0;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalised (e,i)-regularisation of integer partitions"};
  app.name("eireg");
  app.require_subcommand(1);
  Options opt;

  const auto add_partition = [&](CLI::App* sub) {
    sub->add_option("partition", opt.partition, "e.g. 14,13,5,4^5,3,1^2; '-' is empty")->required();
  };
  const auto add_e = [&](CLI::App* sub) {
    sub->add_option("-e", opt.e, "number of runners, e >= 2")->required();
  };
  const auto add_i = [&](CLI::App* sub) {
    return sub->add_option("-i", opt.i, "0 < i < e");
  };
  const auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "JSON output"); };

  auto* reg = app.add_subcommand("reg", "print the (e,i)-regularisation");
  add_partition(reg);
  add_e(reg);
  add_i(reg)->required();
  add_json(reg);
  reg->add_flag("--steps", opt.steps, "print every phi step");

  auto* abacus = app.add_subcommand("abacus", "print the e-abacus display");
  add_partition(abacus);
  add_e(abacus);
  abacus->add_option("-s", opt.beads, "number of beads");
  add_json(abacus);

  auto* ladders = app.add_subcommand("ladders", "label every node with its (e,i)-ladder");
  add_partition(ladders);
  add_e(ladders);
  add_i(ladders)->required();
  add_json(ladders);

  auto* hooks = app.add_subcommand("hooks", "list the (e,i)-hooks");
  add_partition(hooks);
  add_e(hooks);
  add_i(hooks)->required();
  add_json(hooks);

  auto* trace = app.add_subcommand("trace-phi", "show one phi step on the abacus");
  add_partition(trace);
  add_e(trace);
  add_i(trace)->required();
  trace->add_option("-s", opt.beads, "number of beads");
  add_json(trace);

  auto* cls = app.add_subcommand("classes", "list the (e,i)-regularisation classes of n");
  cls->add_option("n", opt.n, "size")->required()->check(CLI::NonNegativeNumber);
  add_e(cls);
  add_i(cls)->required();
  add_json(cls);

  auto* ver = app.add_subcommand("verify", "run the exhaustive checks on partitions of n");
  ver->add_option("n", opt.n, "size")->required()->check(CLI::NonNegativeNumber);
  add_e(ver);
  auto* ver_i = add_i(ver);
  auto* ver_all = ver->add_flag("--all-i", opt.all_i, "every 0 < i < e");
  ver_i->excludes(ver_all);
  ver->add_flag("--up-to", opt.up_to, "check every size from 0 to n");
  ver->add_option("--workers", opt.workers, "worker threads (default: hardware)");
  add_json(ver);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*ver) {
      if (ver_i->count() == 0 && !opt.all_i) {
        err << "verify: give -i or --all-i\n";
        return kUsage;
      }
      const EiParams base(opt.e, opt.all_i ? 1 : opt.i);
      std::vector<VerifyJob> jobs;
      for (int n = opt.up_to ? 0 : opt.n; n <= opt.n; ++n) {
        if (opt.all_i) {
          for (int i = 1; i < base.e(); ++i) jobs.push_back({n, base.e(), i});
        } else {
          jobs.push_back({n, base.e(), base.i()});
        }
      }
      const unsigned workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
      const auto reports = verify_all(jobs, workers);
      bool ok = true;
      auto json = nlohmann::json::array();
      for (const auto& report : reports) {
        ok = ok && report.all_passed();
        if (opt.json) {
          json.push_back(to_json(report));
        } else {
          out << render_report(report);
        }
      }
      if (opt.json) out << json.dump(2) << '\n';
      return ok ? kOk : kCheckFailed;
    }

    if (*cls) {
      const auto all = classes(opt.n, EiParams(opt.e, opt.i));
      if (opt.json) {
        auto json = nlohmann::json::array();
        for (const auto& c : all) json.push_back(to_json(c));
        out << json.dump(2) << '\n';
        return kOk;
      }
      for (const auto& c : all) {
        out << format_partition(c.representative);
        for (const auto& m : c.members) {
          if (m != c.representative) out << " ; " << format_partition(m);
        }
        out << '\n';
      }
      return kOk;
    }

    const Partition lambda = parse_partition(opt.partition);

    if (*abacus) {
      const int s = opt.beads.value_or(default_bead_count(lambda));
      const AbacusDisplay display = abacus_from_partition(lambda, opt.e, s);
      if (opt.json) {
        out << to_json(display).dump() << '\n';
      } else {
        out << render_abacus(display);
      }
      return kOk;
    }

    const EiParams p(opt.e, opt.i);

    if (*reg) {
      const RegResult result = regularise(lambda, p);
      if (opt.json) {
        out << to_json(result).dump(2) << '\n';
        return kOk;
      }
      if (opt.steps) {
        for (std::size_t k = 0; k < result.steps.size(); ++k) {
          out << "step " << k + 1 << '\n';
          print_trace(result.steps[k], out);
        }
      }
      out << format_partition(result.output) << '\n';
      return kOk;
    }

    if (*ladders) {
      if (opt.json) {
        out << nlohmann::json{{"labels", ladder_labels(lambda, p)},
                              {"fingerprint", to_json(fingerprint(lambda, p))}}
                   .dump(2)
            << '\n';
      } else {
        out << (lambda.empty() ? "-\n" : render_ladders(lambda, p));
      }
      return kOk;
    }

    if (*hooks) {
      const auto found = find_ei_hooks(lambda, p);
      if (opt.json) {
        auto json = nlohmann::json::array();
        for (const auto& h : found) json.push_back({{"row", h.node.row}, {"col", h.node.col}, {"k", h.k}});
        out << json.dump() << '\n';
        return kOk;
      }
      for (const auto& h : found) out << format_node(h.node) << " k=" << h.k << '\n';
      if (found.empty()) out << "none\n";
      return kOk;
    }

    if (*trace) {
      const int s = opt.beads.value_or(default_bead_count(lambda));
      const auto step = next_phi_step(lambda, p, s);
      if (opt.json) {
        out << (step ? to_json(*step) : nlohmann::json()).dump(2) << '\n';
      } else if (step) {
        print_trace(*step, out);
      } else {
        out << "no (e,i)-hook: " << format_partition(lambda) << " is (e,i)-regular\n";
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace eireg::cli
