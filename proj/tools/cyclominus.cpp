#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "cyclominus/hminus.hpp"
#include "cyclominus/numeric.hpp"
#include "cyclominus/predict.hpp"
#include "cyclominus/rayclass.hpp"
#include "cyclominus/report_json.hpp"

using namespace cyclominus;

namespace {

// exit-code contract: 0 verified/pass, 1 refuted/fail, 2 not applicable,
// 3 oracle ambiguous by the unit-index factor 2, 64 usage, 65 data/domain errors
int exit_for(Verdict v) {
  switch (v) {
    case Verdict::verified: return 0;
    case Verdict::refuted: return 1;
    case Verdict::ambiguous_by_2: return 3;
    case Verdict::not_checked: return 2;
  }
  return 65;
}

struct Output {
  bool as_json = false;
  std::optional<int> q_policy;

  void print(json j, const std::string& text) const {
    if (as_json) {
      if (q_policy) j["q_policy"] = *q_policy;
      std::cout << j.dump(2) << "\n";
    } else {
      if (q_policy) std::cout << "unit-index policy: Q = " << *q_policy << " (user override)\n";
      std::cout << text;
    }
  }
};

int usage_error(const std::string& msg) {
  std::cerr << "usage error: " << msg << "\n";
  return 64;
}

i64 checked_pow(i64 b, i64 e) {
  i64 r = 1;
  for (i64 i = 0; i < e; ++i) {
    if (b <= 0 || r > 2000000000 / b) throw std::invalid_argument("prime power out of range");
    r *= b;
  }
  return r;
}

struct ClaimOpts {
  std::string claim;
  i64 n = 0, p = 0, f = 1, m = 0, w = 0, h = 1, unit_index = 1, mu = 1, q = 0, nu = 1;
  std::string l1, l2, target, relative;
};

void add_claim_opts(CLI::App* sub, ClaimOpts& o) {
  sub->set_help_flag("--help", "print this help message and exit");  // frees -h for --h below
  sub->add_option("claim", o.claim, "one of scholz, c1, schmidt, p14, metsankyla")
      ->required()
      ->check(CLI::IsMember({"scholz", "c1", "schmidt", "p14", "metsankyla"}));
  sub->add_option("--n", o.n, "cyclotomic level defining the base field (c1), or base degree (scholz)");
  sub->add_option("--p", o.p, "ramified prime");
  sub->add_option("--f", o.f, "exponent of the ramified prime")->capture_default_str();
  sub->add_option("--m", o.m, "full cyclotomic modulus (schmidt)");
  sub->add_option("--w", o.w, "roots of unity in the base field (scholz)");
  sub->add_option("--h", o.h, "class number of the base field")->capture_default_str();
  sub->add_option("--unit-index", o.unit_index, "unit index of the base field")->capture_default_str();
  sub->add_option("--mu", o.mu, "exponent of the first prime (metsankyla)")->capture_default_str();
  sub->add_option("--q", o.q, "second prime (metsankyla)");
  sub->add_option("--nu", o.nu, "exponent of the second prime (metsankyla)")->capture_default_str();
  sub->add_option("--l1", o.l1, "first factor field, e.g. 5: or 9:4 (default: full cyclotomic)");
  sub->add_option("--l2", o.l2, "second factor field (default: full cyclotomic)");
  sub->add_option("--target", o.target, "field carrying the claim, for claims without a built-in target");
  sub->add_option("--relative", o.relative, "base field subtracted from the claim's class group");
}

int run_claim(CLI::App* sub, const ClaimOpts& o, bool do_verify, const Output& out) {
  auto has = [&](const std::string& name) { return sub->count(name) > 0; };
  const std::optional<int> q_over = out.q_policy;

  if (o.claim == "metsankyla") {
    if (!has("--p") || !has("--q"))
      return usage_error("metsankyla needs --p and --q (optional: --mu --nu --l1 --l2)");
    const FieldSpec l1 = has("--l1") ? FieldSpec::parse(o.l1)
                                     : FieldSpec::cyclotomic(checked_pow(o.p, o.mu));
    const FieldSpec l2 = has("--l2") ? FieldSpec::parse(o.l2)
                                     : FieldSpec::cyclotomic(checked_pow(o.q, o.nu));
    if (!do_verify) {
      const FieldSpec l = FieldSpec::compositum(l1, l2);
      const FieldSpec a1 = FieldSpec::compositum(l1, l2.maximal_real_subfield());
      const FieldSpec a2 = FieldSpec::compositum(l2, l1.maximal_real_subfield());
      json j;
      j["claim"] = "metsankyla";
      j["l1"] = to_json(l1);
      j["l2"] = to_json(l2);
      j["l"] = to_json(l);
      j["a1"] = to_json(a1);
      j["a2"] = to_json(a2);
      j["identity"] = "h_minus(l) = h_minus(a1) * h_minus(a2)";
      std::ostringstream text;
      text << "claim metsankyla\n";
      text << "L1 " << l1.to_string() << "  L2 " << l2.to_string() << "\n";
      text << "L = L1 L2 = " << l.to_string() << "\n";
      text << "A1 = L1 * real(L2) = " << a1.to_string() << "\n";
      text << "A2 = L2 * real(L1) = " << a2.to_string() << "\n";
      text << "identity: h_minus(L) = h_minus(A1) * h_minus(A2)\n";
      out.print(std::move(j), text.str());
      return 0;
    }
    const auto rep = metsankyla_check(o.p, o.mu, o.q, o.nu, l1, l2, q_over);
    out.print(to_json(rep), render_text(rep));
    return exit_for(rep.verdict);
  }

  PredictionReport rep;
  if (o.claim == "scholz") {
    if (!has("--n") || !has("--w") || !has("--p"))
      return usage_error("scholz needs --n --w --p (optional: --h --unit-index --f)");
    const BaseFieldInvariants base{o.n, o.w, mpz_class(o.h), mpz_class(o.unit_index)};
    rep = scholz_predict(base, o.p, o.f);
  } else if (o.claim == "c1") {
    if (!has("--n") || !has("--p")) return usage_error("c1 needs --n --p (optional: --f)");
    rep = c1_predict(o.n, o.p, o.f);
  } else if (o.claim == "schmidt") {
    if (!has("--m") || !has("--p")) return usage_error("schmidt needs --m --p");
    rep = schmidt_predict(o.m, o.p);
  } else {  // p14
    if (!has("--p")) return usage_error("p14 needs --p");
    rep = p14_predict(o.p);
  }

  if (do_verify && rep.applicable) {
    if (has("--target")) {
      const FieldSpec target = FieldSpec::parse(o.target);
      std::optional<FieldSpec> relative;
      if (has("--relative")) relative = FieldSpec::parse(o.relative);
      verify_against_oracle(rep, target, relative, q_over);
    } else {
      verify_against_oracle(rep, q_over);
    }
  }

  out.print(to_json(rep), render_text(rep));
  if (!rep.applicable) return 2;
  return do_verify ? exit_for(rep.verdict) : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact minus class groups, ray class groups, and their predicted subgroups"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  int precision = 50;
  app.add_option("--precision", precision, "decimal digits for numeric output")
      ->envname("CYCLOMINUS_PRECISION")
      ->check(CLI::Range(10, 1000000))
      ->capture_default_str();
  int q_policy_val = 0;
  auto* qpol = app.add_option("--q-policy", q_policy_val,
                              "pin the unit index Q in {1,2} where it is uncertain")
                   ->check(CLI::IsMember({1, 2}));
  i64 cap = 1000000;
  app.add_option("--cap", cap, "enumeration cap for exhaustive checks")
      ->check(CLI::Range(static_cast<i64>(1000), static_cast<i64>(1000000000)))
      ->capture_default_str();

  ClaimOpts popts, vopts;
  auto* predict_cmd =
      app.add_subcommand("predict", "compute a predicted subgroup or divisibility claim");
  add_claim_opts(predict_cmd, popts);
  auto* verify_cmd = app.add_subcommand("verify", "prediction plus exact oracle verdict");
  add_claim_opts(verify_cmd, vopts);

  std::string hm_spec;
  auto* hminus_cmd = app.add_subcommand("hminus", "exact minus class number of a CM field");
  hminus_cmd->add_option("spec", hm_spec, "field spec m:gens, e.g. 23: or 155:36")->required();

  std::string rc_base;
  i64 rc_p = 0, rc_f = 1;
  auto* rayclass_cmd =
      app.add_subcommand("rayclass", "ray class group and norm kernel over a quadratic base");
  rayclass_cmd->add_option("--base", rc_base, "base field name or discriminant, e.g. gaussian, -7")
      ->required();
  rayclass_cmd->add_option("--p", rc_p, "split prime")->required();
  rayclass_cmd->add_option("--f", rc_f, "conductor exponent")->capture_default_str();

  std::string rd_spec;
  auto* rd_cmd = app.add_subcommand("rd", "root discriminant of an abelian field");
  rd_cmd->add_option("spec", rd_spec, "field spec m:gens")->required();

  i64 l3_m = 0, l3_n = 0;
  auto* lemma3_cmd =
      app.add_subcommand("lemma3", "surjectivity and kernel of the componentwise product map");
  lemma3_cmd->add_option("--m", l3_m, "modulus")->required();
  lemma3_cmd->add_option("--n", l3_n, "number of factors")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  Output out;
  out.as_json = (format == "json");
  if (qpol->count() > 0) out.q_policy = q_policy_val;

  try {
    if (predict_cmd->parsed()) return run_claim(predict_cmd, popts, false, out);
    if (verify_cmd->parsed()) return run_claim(verify_cmd, vopts, true, out);

    if (hminus_cmd->parsed()) {
      const FieldSpec spec = FieldSpec::parse(hm_spec);
      const auto res = h_minus_pinned(spec, out.q_policy);
      out.print(to_json(res, spec), render_text(res, spec));
      return 0;
    }

    if (rayclass_cmd->parsed()) {
      const auto rep = norm_kernel(quadratic_base(rc_base), rc_p, rc_f);
      out.print(to_json(rep), render_text(rep));
      const bool ok =
          rep.match != KernelMatch::fail && rep.order_formula_ok && rep.kernel_matches_degree;
      return ok ? 0 : 1;
    }

    if (rd_cmd->parsed()) {
      const FieldSpec spec = FieldSpec::parse(rd_spec);
      const auto rd = root_discriminant(spec, precision);
      out.print(to_json(rd, spec), render_text(rd, spec));
      return 0;
    }

    if (lemma3_cmd->parsed()) {
      const auto rep = lemma3_check(l3_m, l3_n, cap);
      out.print(to_json(rep), render_text(rep));
      return rep.pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 65;
  }
  return 64;
}
