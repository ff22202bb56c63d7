#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "dualkit/duality.hpp"
#include "dualkit/error.hpp"
#include "dualkit/identity_lab.hpp"
#include "dualkit/riordan.hpp"
#include "dualkit/sequences.hpp"
#include "dualkit/serialize.hpp"

namespace dualkit::cli {
namespace {

using nlohmann::json;

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::BadParameter, what); }

NamedSequence lookup_sequence(const std::string& name, std::size_t n) {
  if (name.starts_with("random-")) {
    const std::string seed = name.substr(7);
    if (seed.empty() || !std::all_of(seed.begin(), seed.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      usage("bad seed in '" + name + "'");
    }
    return random_sequence(n, std::stoull(seed));
  }
  return sequence_by_name(name, n);
}

DualRelation relation(const std::string& text) {
  const auto r = parse_relation(text);
  if (!r) usage("unknown relation '" + text + "' (expected D1, D2, D3 or D4)");
  return *r;
}

RiordanArray operand(const std::string& name, const std::string& d, const std::string& h, std::size_t order) {
  if (!name.empty()) {
    if (!d.empty() || !h.empty()) usage("give either a builtin name or d and h, not both");
    const auto b = parse_builtin(name);
    if (!b) usage("unknown array '" + name + "'");
    return builtin(*b, order);
  }
  if (d.empty() || h.empty()) usage("an array needs --name or both --d and --h");
  return RiordanArray(PowerSeries(parse_rational_list(d), order), PowerSeries(parse_rational_list(h), order));
}

/// "(1,0),(1/2,1/3)" with optional spaces.
std::vector<std::pair<Rational, Rational>> parse_pairs(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  std::vector<std::pair<Rational, Rational>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw Error(ErrorKind::ParseError, "expected '(' in sample list");
    const auto comma = s.find(',', i);
    const auto close = s.find(')', i);
    if (comma == std::string::npos || close == std::string::npos || comma > close) {
      throw Error(ErrorKind::ParseError, "malformed sample pair");
    }
    out.emplace_back(Rational::parse(s.substr(i + 1, comma - i - 1)), Rational::parse(s.substr(comma + 1, close - comma - 1)));
    i = close + 1;
    if (i < s.size()) {
      if (s[i] != ',') throw Error(ErrorKind::ParseError, "expected ',' between sample pairs");
      ++i;
    }
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty sample list");
  return out;
}

/// Named tables one, k, k2, pow2, or an explicit list f(0), f(1), ...
std::vector<Rational> f_values(const std::string& spec, std::size_t n) {
  std::vector<Rational> f;
  if (spec == "one" || spec == "k" || spec == "k2" || spec == "pow2") {
    for (std::size_t k = 0; k <= n; ++k) {
      const Rational kk(static_cast<long>(k));
      if (spec == "one") f.emplace_back(1);
      if (spec == "k") f.push_back(kk);
      if (spec == "k2") f.push_back(kk * kk);
      if (spec == "pow2") f.push_back(Rational(2).pow(static_cast<long>(k)));
    }
    return f;
  }
  f = parse_rational_list(spec);
  if (f.size() < n + 1) throw Error(ErrorKind::TooShort, "f needs " + std::to_string(n + 1) + " values");
  return f;
}

GridSpec grid_arg(const std::string& text, std::size_t degree) {
  if (text.empty() || text == "auto") return auto_grid(degree);
  return parse_grid(text);
}

json relations_json(const std::vector<DualRelation>& rels) {
  json j = json::array();
  for (auto r : rels) j.push_back(to_string(r));
  return j;
}

json reports_json(const std::vector<IdentityReport>& reps, bool brief) {
  json arr = json::array();
  for (const auto& r : reps) arr.push_back(to_json(r, !brief));
  return {{"verdict", all_hold(reps) ? "HOLDS" : "FAILS"}, {"reports", arr}};
}

IdentityReport flag_report(std::string id, bool ok) {
  IdentityReport r(std::move(id));
  if (!ok) r.verdict = Verdict::Fails;
  return r;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

/// Everything the library can check on its own at order n.
std::vector<IdentityReport> full_suite(std::size_t n) {
  std::vector<IdentityReport> out;
  auto take = [&](std::vector<IdentityReport> reps) {
    for (auto& r : reps) out.push_back(std::move(r));
  };
  for (auto b : {Builtin::R1, Builtin::R2, Builtin::R3, Builtin::R4}) {
    out.push_back(flag_report("riordan.involution." + to_string(b), is_involution(builtin(b, n))));
  }
  for (auto b : {Builtin::Pascal, Builtin::PascalInv}) {
    const auto r = builtin(b, n);
    for (auto c : {PseudoCriterion::Square, PseudoCriterion::Conjugate, PseudoCriterion::AZ, PseudoCriterion::DBar}) {
      out.push_back(flag_report("riordan.pseudo." + to_string(b) + "." + to_string(c), is_pseudo_involution(r, c)));
    }
    out.push_back(flag_report("riordan.from-z." + to_string(b), construct_from_z(z_function(r), n) == r));
  }
  const std::vector<std::pair<NamedSequence, DualRelation>> self_duals = {
      {corpus(Corpus::SignedBernoulli, n), DualRelation::D1}, {bernoulli_numbers(n), DualRelation::D3},
      {euler_half_shifted(n), DualRelation::D2},              {signed_euler_half_shifted(n), DualRelation::D4},
      {corpus(Corpus::PowHalf, n), DualRelation::D1},         {corpus(Corpus::InvBinom, n, 1), DualRelation::D1},
      {corpus(Corpus::InvBinom, n, 2), DualRelation::D1},     {corpus(Corpus::InvBinom, n, 3), DualRelation::D1},
      {corpus(Corpus::Lucas, n), DualRelation::D1},           {corpus(Corpus::NFib, n), DualRelation::D1}};
  for (const auto& [a, rel] : self_duals) {
    out.push_back(flag_report("self-dual." + a.name + "." + to_string(rel), is_self_dual(a, rel)));
  }
  for (const auto& [a, unused] : self_duals) {
    for (auto rel : kAllRelations) {
      const bool sd = is_self_dual(a, rel);
      bool ok = ogf_functional_check(a, rel) == sd && egf_parity_check(a, rel) == sd;
      if (sd && rel == DualRelation::D1) ok = ok && is_self_dual(shift_transform(a, -1), DualRelation::D2);
      if (sd && rel == DualRelation::D3) ok = ok && is_self_dual(shift_transform(a, 1), DualRelation::D4);
      out.push_back(flag_report("equivalence." + a.name + "." + to_string(rel), ok));
    }
  }
  take(verify_dual_bernoulli_closed_forms(n));
  take(verify_thm12_closed_forms(n));
  out.push_back(verify_dual_gf(n, {0, -1, Rational(1, 2)}));
  const NamedSequence partner[4] = {corpus(Corpus::Lucas, n), euler_half_shifted(n), bernoulli_numbers(n),
                                    signed_euler_half_shifted(n)};
  for (const char* f : {"one", "k", "k2", "pow2"}) {
    const auto values = f_values(f, n);
    for (int v = 1; v <= 4; ++v) {
      auto r = check_thm16(values, partner[v - 1], v, n);
      r.param("f", f);
      if (r.verdict == Verdict::Skipped) r.verdict = Verdict::Fails;
      out.push_back(std::move(r));
    }
    for (auto& r : check_thm17(values, n)) {
      r.param("f", f);
      out.push_back(std::move(r));
    }
  }
  take(check_thm65(n, {{1, 0}, {Rational(1, 2), Rational(1, 3)}, {-2, 5}}));
  for (long k = 0; k <= 3; ++k) {
    for (long l = 0; l <= 3; ++l) {
      const auto grid = auto_grid(static_cast<std::size_t>(k + l + 1));
      take(check_cor22(k, l, grid));
      take(check_cor23(k, l, grid));
      take(check_cor24(k, l, grid));
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Thm21Params p{k, l, Rational(1, 3), DualRelation::D3, random_sequence(static_cast<std::size_t>(k + l + 2), seed)};
        take(check_thm21(p, grid));
      }
    }
  }
  return out;
}

struct Common {
  std::size_t order = 0;
  std::string format = "json";
};

void add_order(CLI::App* app, Common& c, std::size_t fallback) {
  c.order = fallback;
  app->add_option("-n,--order", c.order, "truncation order N")->capture_default_str();
}

void add_format(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

void json_only(const Common& c) {
  if (c.format != "json") usage("this command has JSON output only");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Riordan arrays, dual sequences and identity checks", "dualkit"};
  app.require_subcommand(1);
  std::function<int()> action;
  auto emit = [&](const json& j) { out << j.dump(2) << '\n'; };

  // gen
  Common gen;
  std::string gen_name;
  long gen_index = -1;
  auto* g = app.add_subcommand("gen", "generate a sequence or polynomial family");
  g->add_option("name", gen_name, "sequence or family name")->required();
  add_order(g, gen, 10);
  g->add_option("--index", gen_index, "single polynomial of this degree (families only); also spelled --n");
  add_format(g, gen);
  g->callback([&] {
    action = [&] {
      const auto families = family_names();
      if (std::find(families.begin(), families.end(), gen_name) != families.end()) {
        json_only(gen);
        if (gen_index >= 0) {
          const auto fam = family_by_name(gen_name, static_cast<std::size_t>(gen_index));
          emit({{"name", fam.name}, {"n", gen_index}, {"values", to_json(fam.polys.back())}});
        } else {
          emit(to_json(family_by_name(gen_name, gen.order)));
        }
        return kOk;
      }
      if (gen_index >= 0) usage("--n applies to polynomial families only");
      const auto s = lookup_sequence(gen_name, gen.order);
      if (gen.format == "csv") {
        out << sequence_to_csv(s);
      } else {
        emit(to_json(s));
      }
      return kOk;
    };
  });

  // dual
  Common dual;
  std::string dual_seq;
  std::string dual_rel;
  auto* d = app.add_subcommand("dual", "apply one of the dual transforms D1..D4");
  d->add_option("--seq", dual_seq, "sequence name")->required();
  d->add_option("--rel", dual_rel, "D1, D2, D3 or D4")->required();
  add_order(d, dual, 10);
  add_format(d, dual);
  d->callback([&] {
    action = [&] {
      const auto a = lookup_sequence(dual_seq, dual.order);
      const auto b = dual_transform(a, relation(dual_rel));
      if (dual.format == "csv") {
        out << sequence_to_csv(b);
        return kOk;
      }
      emit({{"sequence", a.name},
            {"relation", to_string(relation(dual_rel))},
            {"values", to_json(a.values)},
            {"dual", to_json(b.values)},
            {"self_dual", a.values == b.values}});
      return kOk;
    };
  });

  // riordan
  Common rio;
  std::string r_name, r_d, r_h, r_with, r_with_d, r_with_h, r_f, r_z, r_criterion = "all";
  auto* r = app.add_subcommand("riordan", "Riordan array operations");
  r->require_subcommand(1);
  auto operand_flags = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "print this help and exit");
    sub->add_option("--name", r_name, "builtin: pascal, pascal-inv, r1..r4, identity, m");
    sub->add_option("--d", r_d, "d(t) coefficients, e.g. \"1,1,1\"");
    sub->add_option("--h", r_h, "h(t) coefficients, e.g. \"0,1,1\"");
    add_order(sub, rio, 10);
    add_format(sub, rio);
  };
  auto first = [&] { return operand(r_name, r_d, r_h, rio.order); };
  auto riordan_op = [&](const char* name, const char* help, std::function<int()> body) {
    auto* sub = r->add_subcommand(name, help);
    operand_flags(sub);
    sub->callback([&action, body] { action = body; });
    return sub;
  };
  riordan_op("show", "d, h and order as JSON", [&] {
    json_only(rio);
    emit(to_json(first()));
    return kOk;
  });
  riordan_op("matrix", "entries d_{n,k} for n, k <= N", [&] {
    const auto m = first().matrix();
    if (rio.format == "csv") {
      out << matrix_to_csv(m);
    } else {
      json rows = json::array();
      for (const auto& row : m) rows.push_back(to_json(row));
      emit(rows);
    }
    return kOk;
  });
  auto* mul = riordan_op("multiply", "product with a second array", [&] {
    json_only(rio);
    emit(to_json(first() * operand(r_with, r_with_d, r_with_h, rio.order)));
    return kOk;
  });
  mul->add_option("--with", r_with, "second operand, builtin name");
  mul->add_option("--with-d", r_with_d, "second operand d(t)");
  mul->add_option("--with-h", r_with_h, "second operand h(t)");
  riordan_op("inverse", "group inverse", [&] {
    json_only(rio);
    emit(to_json(inverse(first())));
    return kOk;
  });
  riordan_op("az", "A and Z functions", [&] {
    json_only(rio);
    const auto a = first();
    const auto A = a_function(a);
    emit({{"A", to_json(A)}, {"Z", to_json(z_function(a))}, {"order", A.order()}});
    return kOk;
  });
  auto* pseudo = riordan_op("pseudo", "pseudo-involution test", [&] {
    json_only(rio);
    const auto a = first();
    json res = json::object();
    bool ok = true;
    for (auto c : {PseudoCriterion::Square, PseudoCriterion::Conjugate, PseudoCriterion::AZ, PseudoCriterion::DBar}) {
      if (r_criterion != "all" && r_criterion != to_string(c)) continue;
      bool v = false;
      try {
        v = is_pseudo_involution(a, c);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateDenominator) throw;
        res[to_string(c) + "_error"] = e.what();
      }
      res[to_string(c)] = v;
      ok = ok && v;
    }
    emit({{"criteria", res}, {"order", a.order()}, {"pseudo_involution", ok}});
    return ok ? kOk : kFailed;
  });
  pseudo->add_option("--criterion", r_criterion, "square, conjugate, az, dbar or all")
      ->check(CLI::IsMember({"all", "square", "conjugate", "az", "dbar"}));
  riordan_op("involution", "R R = I", [&] {
    json_only(rio);
    const bool ok = is_involution(first());
    emit({{"involution", ok}, {"order", rio.order}});
    return ok ? kOk : kFailed;
  });
  auto* app_f = riordan_op("apply", "d(t) f(h(t))", [&] {
    json_only(rio);
    if (r_f.empty()) usage("apply needs --f");
    emit(to_json(apply(first(), PowerSeries(parse_rational_list(r_f), rio.order))));
    return kOk;
  });
  app_f->add_option("--f", r_f, "f(t) coefficients");
  auto* fz = r->add_subcommand("from-z", "pseudo-involution built from a Z function");
  fz->add_option("--z", r_z, "Z(t) coefficients")->required();
  add_order(fz, rio, 10);
  add_format(fz, rio);
  fz->callback([&] {
    action = [&] {
      json_only(rio);
      emit(to_json(construct_from_z(PowerSeries(parse_rational_list(r_z), rio.order), rio.order)));
      return kOk;
    };
  });

  // check
  Common chk;
  std::string c_seq, c_rel, c_alpha = "0", c_conv = "D3", c_grid = "auto", c_samples, c_f = "k2", c_family = "thm21";
  long c_k = 0, c_l = 0, c_max = 3;
  int c_variant = 1;
  std::vector<std::uint64_t> c_seeds = {1};
  bool c_brief = false;
  auto* c = app.add_subcommand("check", "verify an identity; exit 1 if anything fails");
  c->require_subcommand(1);
  auto check_op = [&](const char* name, const char* help, std::size_t order, std::function<int()> body) {
    auto* sub = c->add_subcommand(name, help);
    add_order(sub, chk, order);
    sub->add_flag("--brief", c_brief, "omit per-point residuals");
    sub->callback([&action, body, sub, &chk, order] {
      if (sub->count("--order") == 0 && sub->count("-n") == 0) chk.order = order;
      action = body;
    });
    return sub;
  };
  auto finish = [&](const std::vector<IdentityReport>& reps) {
    emit(reports_json(reps, c_brief));
    return all_hold(reps) ? kOk : kFailed;
  };
  auto seq_rel = [&](CLI::App* sub) {
    sub->add_option("--seq", c_seq, "sequence name")->required();
    sub->add_option("--rel", c_rel, "D1, D2, D3 or D4")->required();
  };
  seq_rel(check_op("self-dual", "a equals its dual", 32, [&] {
    const auto a = lookup_sequence(c_seq, chk.order);
    const auto rel = relation(c_rel);
    const auto b = dual_transform(a, rel);
    IdentityReport rep("self-dual");
    rep.param("seq", a.name);
    rep.param("rel", to_string(rel));
    rep.param("order", std::to_string(chk.order));
    for (std::size_t n = 0; n < a.values.size(); ++n) rep.add({{"n", Rational(static_cast<long>(n))}}, b[n] - a[n]);
    return finish({rep});
  }));
  auto gf_check = [&](const char* name, const char* help, bool ogf) {
    seq_rel(check_op(name, help, 40, [&, name, ogf] {
      const auto a = lookup_sequence(c_seq, chk.order);
      const auto rel = relation(c_rel);
      const bool eq = ogf ? ogf_functional_check(a, rel) : egf_parity_check(a, rel);
      const bool sd = is_self_dual(a, rel);
      IdentityReport rep = flag_report(name, eq);
      rep.param("seq", a.name);
      rep.param("rel", to_string(rel));
      rep.param("order", std::to_string(chk.order));
      rep.param("self_dual", bool_str(sd));
      if (eq != sd) rep.notes.push_back("disagrees with the direct self-duality test");
      return finish({rep});
    }));
  };
  gf_check("ogf", "OGF functional equation", true);
  gf_check("egf", "EGF parity after the e^(+-x/2) factor", false);
  check_op("thm11", "dual Bernoulli closed forms", 32, [&] { return finish(verify_dual_bernoulli_closed_forms(chk.order)); });
  check_op("thm12", "six dual Bernoulli/Euler closed forms", 32, [&] { return finish(verify_thm12_closed_forms(chk.order)); });
  check_op("dual-gf", "dual Bernoulli generating function", 40, [&] {
    const std::vector<Rational> xs = c_samples.empty() ? std::vector<Rational>{0, -1, Rational(1, 2)} : parse_rational_list(c_samples);
    return finish({verify_dual_gf(chk.order, xs)});
  })->add_option("--samples", c_samples, "x0 values, e.g. \"0,-1,1/2\"");
  auto* t16 = check_op("thm16", "f-identity for a self-dual sequence", 32, [&] {
    if (c_variant < 1 || c_variant > 4) usage("--variant must be 1..4");
    auto rep = check_thm16(f_values(c_f, chk.order), lookup_sequence(c_seq, chk.order), c_variant, chk.order);
    emit(reports_json({rep}, c_brief));
    return rep.holds() ? kOk : kFailed;
  });
  t16->add_option("--seq", c_seq, "sequence name")->required();
  t16->add_option("--variant", c_variant, "1..4, paired with D1..D4")->required();
  t16->add_option("--f", c_f, "one, k, k2, pow2 or a list f(0),f(1),...")->capture_default_str();
  check_op("thm17", "f-identities with Bernoulli and shifted Euler numbers", 32, [&] {
    return finish(check_thm17(f_values(c_f, chk.order), chk.order));
  })->add_option("--f", c_f, "one, k, k2, pow2 or a list f(0),f(1),...")->capture_default_str();
  check_op("thm65", "harmonic-number matrix identity", 20, [&] {
    const auto pairs = c_samples.empty() ? std::vector<std::pair<Rational, Rational>>{{1, 0}, {Rational(1, 2), Rational(1, 3)}, {-2, 5}}
                                         : parse_pairs(c_samples);
    return finish(check_thm65(chk.order, pairs));
  })->add_option("--samples", c_samples, "(x,y) pairs, e.g. \"(1,0),(1/2,1/3)\"");
  auto kl = [&](CLI::App* sub) {
    sub->add_option("--k", c_k, "k >= 0")->capture_default_str();
    sub->add_option("--l", c_l, "l >= 0")->capture_default_str();
    sub->add_option("--grid", c_grid, "auto or \"x1,x2,...;y1,y2,...\"")->capture_default_str();
  };
  auto degree = [&] { return static_cast<std::size_t>(std::max(0L, c_k + c_l + 1)); };
  auto* t21 = check_op("thm21", "two-variable identities for C_{n,alpha}", 0, [&] {
    const std::size_t need = degree() + 1;
    const auto a = lookup_sequence(c_seq.empty() ? "random-1" : c_seq, need);
    const Thm21Params p{c_k, c_l, Rational::parse(c_alpha), DualRelation::D3, a};
    const auto grid = grid_arg(c_grid, degree());
    if (c_conv != "sweep") {
      Thm21Params q = p;
      q.convention = relation(c_conv);
      return finish(check_thm21(q, grid));
    }
    json by = json::object();
    std::vector<DualRelation> holding;
    for (const auto& [rel, reps] : sweep_thm21(p, grid)) {
      by[to_string(rel)] = reports_json(reps, c_brief);
      if (all_hold(reps)) holding.push_back(rel);
    }
    emit({{"convention", "sweep"}, {"holding", relations_json(holding)}, {"by_convention", by},
          {"verdict", holding.empty() ? "FAILS" : "HOLDS"}});
    return holding.empty() ? kFailed : kOk;
  });
  kl(t21);
  t21->add_option("--alpha", c_alpha, "rational alpha")->capture_default_str();
  t21->add_option("--convention", c_conv, "D1..D4 or sweep")->capture_default_str();
  t21->add_option("--seq", c_seq, "sequence a (default random-1)");
  kl(check_op("cor22", "Bernoulli specializations, x + y + z = 1", 0, [&] {
    return finish(check_cor22(c_k, c_l, grid_arg(c_grid, degree())));
  }));
  kl(check_op("cor23", "conjugate Bernoulli forms, x + y + z = 1", 0, [&] {
    return finish(check_cor23(c_k, c_l, grid_arg(c_grid, degree())));
  }));
  kl(check_op("cor24", "Euler forms, x + y + z = 2, and the number identities", 0, [&] {
    return finish(check_cor24(c_k, c_l, grid_arg(c_grid, degree())));
  }));
  auto* det = check_op("detect", "which dual convention makes the theorem hold", 0, [&] {
    ConventionBounds b;
    b.max_k = c_max;
    b.max_l = c_max;
    b.seeds = c_seeds;
    b.alpha = Rational::parse(c_alpha == "0" ? "1/3" : c_alpha);
    ConventionFamily fam = ConventionFamily::Thm21;
    if (c_family == "cor23") fam = ConventionFamily::Cor23;
    if (c_family == "cor24") fam = ConventionFamily::Cor24;
    const auto res = detect_convention(fam, b);
    json holding = json::object();
    for (const auto& [id, rels] : res.holding) holding[id] = relations_json(rels);
    emit({{"family", to_string(fam)}, {"holding", holding}, {"all_displays", relations_json(res.all_displays)}});
    return kOk;
  });
  det->add_option("--family", c_family, "thm21, cor23 or cor24")->check(CLI::IsMember({"thm21", "cor23", "cor24"}))->capture_default_str();
  det->add_option("--max-kl", c_max, "bound on k and l")->capture_default_str();
  det->add_option("--seeds", c_seeds, "random sequence seeds (thm21)");
  det->add_option("--alpha", c_alpha, "alpha for thm21 (default 1/3)");
  check_op("all", "every library-side check at order N", 32, [&] {
    c_brief = true;
    auto reps = full_suite(chk.order);
    return finish(reps);
  });

  // CLI11 folds -n and --n into one name, so --n K becomes --index K.
  // "check --id X" is accepted as a spelling of "check X".
  std::vector<std::string> norm;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a == "--n") {
      norm.emplace_back("--index");
    } else if (a.starts_with("--n=")) {
      norm.push_back("--index=" + a.substr(4));
    } else if (a == "--id" && !norm.empty() && norm.back() == "check") {
      continue;
    } else if (a.starts_with("--id=") && !norm.empty() && norm.back() == "check") {
      norm.push_back(a.substr(5));
    } else {
      norm.push_back(a);
    }
  }
  std::vector<std::string> reversed(norm.rbegin(), norm.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const Error& e) {
    err << "dualkit: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace dualkit::cli
