#pragma once

// Command-line front end. Exit codes: 0 success or verified, 1 violations
// found (or a negative answer), 2 usage error.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quiddity/io.hpp"
#include "quiddity/quiddity.hpp"

namespace quiddity::cli {

enum ExitCode : int { kOk = 0, kViolations = 1, kUsage = 2 };

/// "1,3,2" -> (1,3,2). Entries must be non-negative integers.
inline Pattern parse_sequence(const std::string& text) {
  Pattern out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error("malformed number '" + item + "' in '" + text + "'");
    }
    if (used != item.size() || v < 0) throw Error("malformed number '" + item + "' in '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error("empty sequence");
  return out;
}

inline const std::map<std::string, std::function<CoverPair()>>& builtin_pairs() {
  static const std::map<std::string, std::function<CoverPair()>> pairs{
      {"base", [] { return base_cover_pair(); }},
      {"cor12", [] { return cor12_cover_pair(); }},
      {"short",
       [] {
         CoverPair p;
         p.E = {DihedralCycle{0, 0}};
         for (const auto& f : tables::short_patterns())
           if (f != Pattern{0, 0}) p.F.insert(f);
         return p;
       }},
      {"two-step",
       [] {
         const auto& E = tables::cor12_exceptions();
         const auto& F = tables::two_step_patterns();
         return CoverPair{{E.begin(), E.end()}, {F.begin(), F.end()}};
       }},
      {"thm16",
       [] {
         const auto& E = tables::cor12_exceptions();
         const auto& F = tables::interior_patterns();
         return CoverPair{{E.begin(), E.end()}, {F.begin(), F.end()}};
       }},
      {"cor15",
       [] {
         const auto& E = tables::cor12_exceptions();
         const auto& F = tables::affine_patterns();
         return CoverPair{{E.begin(), E.end()}, {F.begin(), F.end()}};
       }},
  };
  return pairs;
}

/// "builtin:<name>" or a path to a JSON file {"E": [...], "F": [...]}.
inline CoverPair resolve_pair(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    const std::string name = source.substr(prefix.size());
    const auto& pairs = builtin_pairs();
    auto it = pairs.find(name);
    if (it == pairs.end()) throw Error("unknown builtin '" + name + "'");
    return it->second();
  }
  std::ifstream in(source);
  if (!in) throw Error("cannot open '" + source + "'");
  try {
    return json::parse(in).get<CoverPair>();
  } catch (const json::exception& e) {
    throw Error("bad cover pair JSON in '" + source + "': " + e.what());
  }
}

namespace detail {

inline std::vector<Scalar> parse_triple_literal(const std::string& text, std::int64_t zeta) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    out.push_back(parse_scalar(item, zeta));
  }
  if (out.size() != 3) throw Error("triple needs three comma-separated entries: '" + text + "'");
  return out;
}

inline std::string describe(const AffineDecomposition& d) {
  std::ostringstream os;
  os << "blocks:";
  for (const auto& b : d.blocks) os << ' ' << to_string(b);
  os << "\njunctions:";
  for (const auto& j : d.junctions) os << " [" << j.position << "] " << j.left + 2 + j.right << "=" << j.left << "+2+" << j.right;
  os << "\nperiod copies: " << d.period_multiple << '\n';
  return os.str();
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"quiddity cycles, local descriptions and affine rank-two triples", "quiddity"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit one JSON document");

  int length = 0;
  int bound = kDefaultEnumerateBound;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List quiddity cycles of a given length");
  enumerate_cmd->add_option("--length", length, "Cycle length")->required();
  enumerate_cmd->add_option("--bound", bound, "Largest length allowed");

  std::string cycle_text;
  auto* check_cmd = app.add_subcommand("check", "Test a cycle for membership");
  check_cmd->add_option("--cycle", cycle_text, "Comma-separated entries")->required();

  std::string in_path, out_path;
  auto* step_cmd = app.add_subcommand("cover-step", "Apply one cover step (E,F) -> (E',F')");
  step_cmd->add_option("--in", in_path, "Cover pair JSON file or builtin:<name>")->required();
  step_cmd->add_option("--out", out_path, "Write the new pair here (default: stdout)");

  std::string pair_spec;
  int max_length = 12;
  auto* cover_cmd = app.add_subcommand("verify-cover", "Check a cover pair against all cycles up to a length");
  cover_cmd->add_option("--pair", pair_spec, "Cover pair JSON file or builtin:<name>")->required();
  cover_cmd->add_option("--max", max_length, "Largest cycle length");

  auto* thm_cmd = app.add_subcommand("verify-thm16", "Check the interior-pattern statement on every representative");
  thm_cmd->add_option("--max", max_length, "Largest cycle length");

  std::int64_t zeta = 0, e1 = 0, e = 0, e2 = 0;
  std::string triple_text;
  int max_steps = kDefaultMaxSteps;
  auto* charseq_cmd = app.add_subcommand("charseq", "Characteristic sequence of a triple");
  charseq_cmd->add_option("--zeta", zeta, "Order n of the primitive root ζ");
  auto* o1 = charseq_cmd->add_option("--q1", e1, "Exponent of ζ in q1");
  auto* o = charseq_cmd->add_option("--q", e, "Exponent of ζ in q");
  auto* o2 = charseq_cmd->add_option("--q2", e2, "Exponent of ζ in q2");
  auto* ot = charseq_cmd->add_option("--triple", triple_text, "Literal triple, e.g. \"q^1,q^-4,q^4\"");
  ot->excludes(o1)->excludes(o)->excludes(o2);
  charseq_cmd->add_option("--max-steps", max_steps, "Step cap for the walk");

  std::string window_text;
  int modulus_bound = 12;
  auto* solve_cmd = app.add_subcommand("solve", "Root-of-unity triples whose sequence contains a window");
  solve_cmd->add_option("--window", window_text, "Comma-separated window, c_{-1} first")->required();
  solve_cmd->add_option("--bound", modulus_bound, "Largest root order searched");

  int n_max = 24;
  auto* classify_cmd = app.add_subcommand("classify", "Classify affine root-of-unity triples");
  classify_cmd->add_option("--nmax", n_max, "Largest root order");

  std::int64_t max_order = 48;
  auto* generic_cmd = app.add_subcommand("generic", "Check the generic-parameter rows and their specializations");
  generic_cmd->add_option("--max-order", max_order, "Largest order of the substituted root");

  std::string period_text;
  int max_multiple = kDefaultMaxMultiple;
  auto* decompose_cmd = app.add_subcommand("decompose", "Glue a period from quiddity blocks");
  decompose_cmd->add_option("--period", period_text, "Comma-separated period")->required();
  decompose_cmd->add_option("--max-multiple", max_multiple, "Largest number of period copies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto emit = [&](const json& j) { out << j.dump(2) << '\n'; };

  try {
    if (enumerate_cmd->parsed()) {
      const auto cycles = enumerate(length, bound);
      if (as_json) {
        emit(json{{"length", length}, {"count", cycles.size()}, {"cycles", cycles}});
      } else {
        out << cycles.size() << " quiddity cycles of length " << length << '\n';
        for (const auto& c : cycles) out << to_string(c) << '\n';
      }
      return kOk;
    }

    if (check_cmd->parsed()) {
      const Pattern raw = parse_sequence(cycle_text);
      const DihedralCycle c(raw);
      const bool member = is_quiddity(c);
      const EtaMatrix m = eta_product(raw);
      if (as_json) {
        emit(json{{"cycle", raw},
                  {"canonical", c.canon()},
                  {"quiddity", member},
                  {"eta_product", {{m.a, m.b}, {m.c, m.d}}}});
      } else {
        out << "canonical: " << to_string(c) << '\n'
            << "quiddity cycle: " << (member ? "yes" : "no") << '\n'
            << "eta product: " << to_string(m) << '\n';
      }
      return member ? kOk : kViolations;
    }

    if (step_cmd->parsed()) {
      const CoverPair next = theorem_step(resolve_pair(in_path));
      const json j = next;
      if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw Error("cannot write '" + out_path + "'");
        file << j.dump(2) << '\n';
        if (as_json) {
          emit(json{{"out", out_path}, {"E", next.E.size()}, {"F", next.F.size()}});
        } else {
          out << "wrote " << out_path << ": |E'| = " << next.E.size() << ", |F'| = " << next.F.size()
              << ", min pattern length " << min_pattern_length(next.F) << '\n';
        }
      } else {
        emit(j);
      }
      return kOk;
    }

    if (cover_cmd->parsed()) {
      const CoverReport r = verify_cover(resolve_pair(pair_spec), max_length);
      if (as_json) {
        emit(r);
      } else {
        out << "checked " << r.checked << " cycles of length <= " << r.bound << ", " << r.violations.size()
            << " violations\n";
        for (const auto& v : r.violations) out << "  " << to_string(v) << '\n';
      }
      return r.ok() ? kOk : kViolations;
    }

    if (thm_cmd->parsed()) {
      const SubseqReport r = verify_thm_subseqs(max_length);
      const bool vacuous = std::any_of(r.pattern_hits.begin(), r.pattern_hits.end(), [](auto h) { return h == 0; });
      if (as_json) {
        emit(r);
      } else {
        out << "checked " << r.checked << " representatives of length <= " << r.bound << ", "
            << r.violations.size() << " violations\n";
        for (std::size_t k = 0; k < r.pattern_hits.size(); ++k)
          out << "  " << to_string(tables::interior_patterns()[k]) << ": " << r.pattern_hits[k] << '\n';
        for (const auto& v : r.violations) out << "  violation " << to_string(v) << '\n';
      }
      return r.ok() && !vacuous ? kOk : kViolations;
    }

    if (charseq_cmd->parsed()) {
      Triple t;
      if (!triple_text.empty()) {
        const auto s = detail::parse_triple_literal(triple_text, zeta);
        t = {s[0], s[1], s[2]};
      } else {
        if (zeta <= 0) throw Error("charseq needs --zeta n with --q1/--q/--q2, or --triple");
        t = root_triple(zeta, e1, e, e2);
      }
      const std::int64_t zeta_order = zeta > 0 ? zeta : (is_root_of_unity(t) ? level(t) : 0);
      const CharSeqReport r = walk(t, max_steps);
      if (as_json) {
        emit(r);
      } else {
        out << "triple: " << to_string(t, zeta_order) << '\n'
            << "shape: " << to_string(r.shape) << '\n'
            << "period: " << to_string(r.period) << '\n';
        out << "ends:";
        for (auto k : r.ends) out << ' ' << k;
        out << '\n' << render_arrows(r, zeta_order);
      }
      return kOk;
    }

    if (solve_cmd->parsed()) {
      const SolveReport r = solve_triples(parse_sequence(window_text), modulus_bound);
      if (as_json) {
        emit(r);
      } else {
        out << r.matches.size() << " triples with window " << to_string(r.window) << " (root order <= " << r.bound
            << ")" << (r.ambiguous() ? ", ambiguous: the window also occurs through an end" : "") << '\n';
        for (const auto& m : r.matches)
          out << "  " << to_string(m.triple, m.modulus) << "  ζ ∈ μ" << m.modulus
              << (m.through_end ? "  [through end]" : "") << '\n';
      }
      return kOk;
    }

    if (classify_cmd->parsed()) {
      const ClassificationReport r = classify_mu(n_max);
      if (as_json) {
        emit(r);
      } else {
        out << render_table(r);
        out << r.triples << " triples, " << r.broken << " broken, " << r.orbits << " orbits, " << r.affine.size()
            << " affine, " << r.unmatched_orbits() << " unmatched\n";
        for (const auto& rc : r.rows)
          out << "row " << rc.row << ": " << (rc.found && rc.period_ok && rc.same_orbit ? "found" : "MISSING") << '\n';
      }
      return r.ok() ? kOk : kViolations;
    }

    if (generic_cmd->parsed()) {
      const GenericRowsReport r = check_generic_rows(max_order);
      if (as_json) {
        emit(r);
      } else {
        for (const auto& row : r.rows) {
          out << "row " << row.row << " " << to_string(row.diagram) << ": period " << to_string(row.generic.period)
              << " (" << to_string(row.generic.shape) << "), " << (row.generic_affine ? "affine" : "not affine")
              << ", " << row.mismatches.size() << " specialization mismatches\n";
          for (const auto& s : row.mismatches)
            out << "  q = ζ^" << s.power << ", ζ ∈ μ" << s.order << ": period " << to_string(s.period) << '\n';
        }
      }
      return r.ok() ? kOk : kViolations;
    }

    if (decompose_cmd->parsed()) {
      const Pattern period = parse_sequence(period_text);
      const auto d = decompose_affine(period, max_multiple);
      const bool pattern_ok = cor15_check(period);
      if (as_json) {
        json j{{"period", period}, {"affine", d.has_value()}, {"cor15", pattern_ok}};
        if (d) j["decomposition"] = *d;
        emit(j);
      } else if (d) {
        out << "affine\n" << detail::describe(*d) << "pattern condition: " << (pattern_ok ? "pass" : "fail") << '\n';
      } else {
        out << "not affine (no decomposition with up to " << max_multiple << " period copies)\n"
            << "pattern condition: " << (pattern_ok ? "pass" : "fail") << '\n';
      }
      return d ? kOk : kViolations;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace quiddity::cli
