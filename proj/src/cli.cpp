#include "polyarith/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "polyarith/catalog.hpp"
#include "polyarith/error.hpp"

namespace polyarith {

namespace {

/// Malformed flag value; reported with the flag name and exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Integer integer_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const Error&) {
    throw UsageError("invalid value for " + flag + ": '" + text + "' is not an integer");
  }
}

std::uint64_t count_flag(const std::string& flag, const std::string& text) {
  auto v = to_uint64(integer_flag(flag, text));
  if (!v) throw UsageError("invalid value for " + flag + ": '" + text + "' is not a non-negative count");
  return *v;
}

std::vector<Integer> list_flag(const std::string& flag, const std::string& text) {
  std::vector<Integer> out;
  std::string_view rest(text);
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(integer_flag(flag, std::string(rest.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

Json element_json(const RingElement& x) {
  return Json{{"value", to_decimal(x.value())}, {"k", to_decimal(x.k())}};
}

Json elements_json(std::span<const RingElement> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_decimal(x.value()));
  return out;
}

Json numeral_json(const Numeral& num, const RingElement& value) {
  Json digits = Json::array();
  Json indices = Json::array();
  for (const auto& d : num.digits) {
    digits.push_back(to_decimal(num.ring.element(d).value()));
    indices.push_back(to_decimal(d));
  }
  return Json{{"ring", to_string(num.ring)},
              {"numeral", format_numeral(num)},
              {"digits", digits},
              {"digit_indices", indices},
              {"base", to_decimal(num.base.value())},
              {"base_k", to_decimal(num.base.k())},
              {"lnu", num.lnu},
              {"lmu", num.lmu},
              {"value", to_decimal(value.value())},
              {"k", to_decimal(value.k())}};
}

struct RingFlags {
  std::string a;
  std::string b;
  std::string m;
  std::string n;

  void attach(CLI::App* sub) {
    sub->add_option("--a", a, "class residue a (0 <= a < b)")->required();
    sub->add_option("--b", b, "class modulus b (>= 1)")->required();
    sub->add_option("--m", m, "addition arity (default: minimal)");
    sub->add_option("--n", n, "multiplication arity (default: minimal)");
  }

  PolyadicRing ring() const {
    const auto cls = make_class(integer_flag("--a", a), integer_flag("--b", b));
    if (m.empty() && n.empty()) return PolyadicRing::minimal(cls);
    const auto shape = minimal_arity_shape(cls);
    return PolyadicRing::with_arities(cls, m.empty() ? shape.m : count_flag("--m", m),
                                      n.empty() ? shape.n : count_flag("--n", n));
  }
};

ExportFormat format_flag(const std::string& text) {
  try {
    return parse_format(text);
  } catch (const Error&) {
    throw UsageError("invalid value for --format: '" + text + "' (expected json or csv)");
  }
}

std::uint64_t catalog_cap() {
  const char* env = std::getenv("POLYARITH_CATALOG_CAP");
  if (env == nullptr || *env == '\0') return kDefaultCatalogCap;
  return count_flag("POLYARITH_CATALOG_CAP", env);
}

void print(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic in polyadic (m,n)-rings of integers and their numeral systems.\n"
               "Digits are given as class values (e.g. 2,5,8,11 in [[2]]_3); --base-k takes the\n"
               "index k_p of the base x_{k_p} = a + b k_p."};
  app.name("polyarith");
  app.require_subcommand(1);

  std::vector<std::pair<CLI::App*, std::function<void()>>> commands;

  // shape
  std::string shape_a, shape_b;
  auto* shape = app.add_subcommand("shape", "minimal arity shape (m,n) and invariants I, J of [[a]]_b");
  shape->add_option("--a", shape_a, "class residue")->required();
  shape->add_option("--b", shape_b, "class modulus")->required();
  commands.emplace_back(shape, [&] {
    const auto cls = make_class(integer_flag("--a", shape_a), integer_flag("--b", shape_b));
    const auto solved = solve_arity_shape(cls);
    print(out, shape_to_json(cls, solved));
    if (!solved) minimal_arity_shape(cls);  // raises NoAritySolution for the error stream
  });

  // table
  std::string table_bmax, table_format = "json";
  auto* table = app.add_subcommand("table", "arity shapes of every class with b <= b_max");
  table->add_option("--b-max", table_bmax, "largest modulus")->required();
  table->add_option("--format", table_format, "json|csv");
  commands.emplace_back(table, [&] {
    const auto format = format_flag(table_format);
    const auto rows = arity_shape_table(count_flag("--b-max", table_bmax));
    export_shape_table(rows, format, out);
  });

  // add / mul
  RingFlags add_ring, mul_ring;
  std::string add_values, mul_values;
  auto* add = app.add_subcommand("add", "m-ary addition nu_m (or an admissible composition of it)");
  add_ring.attach(add);
  add->add_option("--values", add_values, "operands as class values, comma separated")->required();
  auto* mul = app.add_subcommand("mul", "n-ary multiplication mu_n (or an admissible composition of it)");
  mul_ring.attach(mul);
  mul->add_option("--values", mul_values, "operands as class values, comma separated")->required();
  auto operate = [&](const RingFlags& flags, const std::string& values, bool additive) {
    const auto ring = flags.ring();
    std::vector<RingElement> xs;
    for (const auto& v : list_flag("--values", values)) xs.push_back(ring.from_value(v));
    const std::uint64_t arity = additive ? ring.m() : ring.n();
    // Fewer operands than the arity is an arity error rather than a word-length one.
    const bool single = xs.size() <= arity;
    const RingElement result = single ? (additive ? nu(ring, xs) : mu(ring, xs))
                                      : (additive ? nu_word(ring, xs) : mu_word(ring, xs));
    Json j{{"ring", to_string(ring)},
           {"operation", additive ? "nu" : "mu"},
           {"arity", arity},
           {"width", xs.size()},
           {"compositions", word_length_for(arity, xs.size())->compositions},
           {"value", to_decimal(result.value())},
           {"k", to_decimal(result.k())}};
    if (additive && xs.size() == arity) {
      j["I"] = to_decimal(ring.shape().I);
    } else if (!additive && xs.size() == arity) {
      const auto idx = product_index(ring, xs);
      j["s"] = to_decimal(idx.s);
      j["J"] = to_decimal(idx.J);
    }
    print(out, j);
  };
  commands.emplace_back(add, [&] { operate(add_ring, add_values, true); });
  commands.emplace_back(mul, [&] { operate(mul_ring, mul_values, false); });

  // power
  RingFlags power_ring;
  std::string power_value, power_l = "1";
  auto* power = app.add_subcommand("power", "polyadic power x^<l>");
  power_ring.attach(power);
  power->add_option("--value", power_value, "x as a class value")->required();
  power->add_option("--l", power_l, "number of composed multiplications (>= 1)");
  commands.emplace_back(power, [&] {
    const auto ring = power_ring.ring();
    const auto x = ring.from_value(integer_flag("--value", power_value));
    const std::uint64_t ell = count_flag("--l", power_l);
    const auto result = polyadic_power(ring, x, ell);
    Json j{{"ring", to_string(ring)}, {"x", to_decimal(x.value())}, {"l", ell}};
    j["factors"] = admissible_width(ring.n(), ell);
    j["value"] = to_decimal(result.value());
    j["k"] = to_decimal(result.k());
    print(out, j);
  });

  // quer
  RingFlags quer_ring;
  std::string quer_value;
  auto* quer = app.add_subcommand("quer", "additive querelement xbar with nu_m[xbar, x, ..., x] = x");
  quer_ring.attach(quer);
  quer->add_option("--value", quer_value, "x as a class value")->required();
  commands.emplace_back(quer, [&] {
    const auto ring = quer_ring.ring();
    const auto x = ring.from_value(integer_flag("--value", quer_value));
    const auto q = add_querelement(ring, x);
    print(out, Json{{"ring", to_string(ring)},
                    {"x", to_decimal(x.value())},
                    {"value", to_decimal(q.value())},
                    {"k", to_decimal(q.k())}});
  });

  // laws
  RingFlags laws_ring;
  std::string laws_samples = "100", laws_seed = "1", laws_range = "1000";
  auto* laws = app.add_subcommand("laws", "randomized ring-law verification");
  laws_ring.attach(laws);
  laws->add_option("--samples", laws_samples, "samples per law");
  laws->add_option("--seed", laws_seed, "PRNG seed (xorshift64*)");
  laws->add_option("--k-range", laws_range, "indices drawn from [-R, R]");
  commands.emplace_back(laws, [&] {
    const auto ring = laws_ring.ring();
    const auto report = verify_ring_laws(ring, count_flag("--samples", laws_samples),
                                         count_flag("--k-range", laws_range), count_flag("--seed", laws_seed));
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      Json cj{{"law", c.law}, {"trials", c.trials}, {"failures", c.failures}};
      cj["counterexample"] = c.counterexample ? Json(*c.counterexample) : Json(nullptr);
      checks.push_back(std::move(cj));
    }
    print(out, Json{{"ring", to_string(ring)},
                    {"prng", report.prng},
                    {"seed", report.seed},
                    {"samples", report.sample_count},
                    {"k_range", report.k_range},
                    {"passed", report.all_passed()},
                    {"laws", checks}});
  });

  // special
  RingFlags special_ring;
  std::string special_window = std::to_string(kDefaultSpecialWindow);
  auto* special = app.add_subcommand("special", "zero, identities, idempotents, nilpotents, neutral polyads");
  special_ring.attach(special);
  special->add_option("--window", special_window, "search indices k in [-W, W]");
  commands.emplace_back(special, [&] {
    const auto ring = special_ring.ring();
    const auto rep = find_special_elements(ring, count_flag("--window", special_window));
    Json polyads = Json::array();
    for (const auto& p : rep.neutral_polyads) polyads.push_back(elements_json(p));
    Json j{{"ring", to_string(ring)}, {"k_window", rep.k_window}};
    j["zero"] = rep.zero ? Json(to_decimal(rep.zero->value())) : Json(nullptr);
    j["identities"] = elements_json(rep.identities);
    j["mu_idempotents"] = elements_json(rep.mu_idempotents);
    j["nu_idempotents"] = elements_json(rep.nu_idempotents);
    j["nilpotents"] = rep.nilpotents ? elements_json(*rep.nilpotents) : Json("not applicable");
    j["neutral_polyads"] = polyads;
    print(out, j);
  });

  // eval
  RingFlags eval_ring;
  std::string eval_base_k, eval_digits, eval_numeral;
  auto* eval = app.add_subcommand("eval", "evaluate a numeral");
  eval_ring.attach(eval);
  auto* eval_base_opt = eval->add_option("--base-k", eval_base_k, "index k_p of the base x_{k_p}");
  auto* eval_digits_opt = eval->add_option("--digits", eval_digits, "digits as class values, most significant first");
  auto* eval_numeral_opt = eval->add_option("--numeral", eval_numeral, "numeral text, e.g. (2,5,5,2)_8");
  eval_digits_opt->needs(eval_base_opt);
  eval_numeral_opt->excludes(eval_digits_opt)->excludes(eval_base_opt);
  commands.emplace_back(eval, [&] {
    const auto ring = eval_ring.ring();
    Numeral num = [&] {
      if (!eval_numeral.empty()) return parse_numeral(ring, eval_numeral);
      if (eval_digits.empty()) throw UsageError("eval needs --digits with --base-k, or --numeral");
      const auto base = ring.element(integer_flag("--base-k", eval_base_k));
      return make_numeral_from_values(ring, base, list_flag("--digits", eval_digits));
    }();
    print(out, numeral_json(num, evaluate(num)));
  });

  // decode
  RingFlags decode_ring;
  std::string decode_base_k, decode_value;
  auto* decode_cmd = app.add_subcommand("decode", "shortest numeral for a value, if representable");
  decode_ring.attach(decode_cmd);
  decode_cmd->add_option("--base-k", decode_base_k, "index k_p of the base")->required();
  decode_cmd->add_option("--value", decode_value, "value (a class member)")->required();
  commands.emplace_back(decode_cmd, [&] {
    const auto ring = decode_ring.ring();
    const auto base = ring.element(integer_flag("--base-k", decode_base_k));
    const auto value = ring.from_value(integer_flag("--value", decode_value));
    const auto num = decode(ring, base, value);
    print(out, numeral_json(num, value));
  });

  // enumerate
  RingFlags enum_ring;
  std::string enum_base_k, enum_lnu = "1", enum_limit, enum_format = "json";
  auto* enumerate_cmd = app.add_subcommand("enumerate", "catalog of all numerals of a given length");
  enum_ring.attach(enumerate_cmd);
  enumerate_cmd->add_option("--base-k", enum_base_k, "index k_p of the base")->required();
  enumerate_cmd->add_option("--lnu", enum_lnu, "number of composed additions ell_nu");
  enumerate_cmd->add_option("--limit", enum_limit, "emit at most N records");
  enumerate_cmd->add_option("--format", enum_format, "json|csv");
  commands.emplace_back(enumerate_cmd, [&] {
    const auto format = format_flag(enum_format);
    const auto ring = enum_ring.ring();
    EnumerateOptions options;
    options.cap = catalog_cap();
    if (!enum_limit.empty()) options.limit = count_flag("--limit", enum_limit);
    const auto catalog =
        enumerate(ring, ring.element(integer_flag("--base-k", enum_base_k)), count_flag("--lnu", enum_lnu), options);
    export_catalog(to_records(catalog), format, out);
  });

  // clock
  std::string clock_bases, clock_digits, clock_decode;
  auto* clock = app.add_subcommand("clock", "mixed-radix evaluation; bases least significant first");
  clock->add_option("--bases", clock_bases, "p(1),p(2),..., e.g. 60,60,24")->required();
  auto* clock_digits_opt = clock->add_option("--digits", clock_digits, "digits, most significant first");
  auto* clock_decode_opt = clock->add_option("--decode", clock_decode, "value to split into digits");
  clock_digits_opt->excludes(clock_decode_opt);
  commands.emplace_back(clock, [&] {
    const auto scheme = make_mixed_scheme(list_flag("--bases", clock_bases));
    if (!clock_decode.empty()) {
      const auto digits = decode_binary_mixed(integer_flag("--decode", clock_decode), scheme);
      Json dj = Json::array();
      for (const auto& d : digits) dj.push_back(to_decimal(d));
      print(out, Json{{"value", to_decimal(integer_flag("--decode", clock_decode))}, {"digits", dj}});
      return;
    }
    if (clock_digits.empty()) throw UsageError("clock needs --digits or --decode");
    const auto digits = list_flag("--digits", clock_digits);
    const auto value = eval_binary_mixed(digits, scheme);
    const auto lengths = binary_mixed_lengths(digits.size());
    print(out, Json{{"value", to_decimal(value)}, {"lnu", lengths.lnu}, {"lmu", lengths.lmu}});
  });

  // pmix
  std::string pmix_scheme, pmix_digits, pmix_lnu = "1";
  auto* pmix = app.add_subcommand("pmix", "polyadic mixed-base evaluation from a scheme file");
  pmix->add_option("--scheme", pmix_scheme, "JSON file {\"ring\":{a,b[,m,n]},\"towers\":[[...],...]}")->required();
  pmix->add_option("--digits", pmix_digits, "digits as class values, most significant first")->required();
  pmix->add_option("--lnu", pmix_lnu, "number of composed additions ell_nu");
  commands.emplace_back(pmix, [&] {
    std::ifstream file(pmix_scheme);
    if (!file) throw UsageError("cannot read --scheme file '" + pmix_scheme + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    Json doc;
    try {
      doc = Json::parse(buffer.str());
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("--scheme file is not valid JSON: " + std::string(e.what()));
    }
    const auto scheme = polyadic_scheme_from_json(doc);
    std::vector<RingElement> digits;
    for (const auto& v : list_flag("--digits", pmix_digits)) digits.push_back(scheme.ring.from_value(v));
    const auto result = eval_polyadic_mixed(digits, scheme, count_flag("--lnu", pmix_lnu));
    Json j{{"ring", to_string(scheme.ring)}};
    j["bases"] = to_decimal(base_count(scheme.digit_count(), scheme.ring.n()));
    j.update(element_json(result));
    print(out, j);
  });

  // efficiency
  std::string eff_symbols, eff_p;
  auto* eff = app.add_subcommand("efficiency", "E(p) = p^(s/p); without --p, the best integer base");
  eff->add_option("--symbols", eff_symbols, "total symbol budget s")->required();
  eff->add_option("--p", eff_p, "base p");
  commands.emplace_back(eff, [&] {
    const std::uint64_t s = count_flag("--symbols", eff_symbols);
    if (!eff_p.empty()) {
      const std::uint64_t p = count_flag("--p", eff_p);
      print(out, Json{{"symbols", s}, {"p", p}, {"E", efficiency(s, p)}});
      return;
    }
    const std::uint64_t best = best_integer_base(s);
    print(out, Json{{"symbols", s}, {"best_p", best}, {"E", efficiency(s, best)}});
  });

  // num-add / num-mul
  RingFlags nadd_ring, nmul_ring;
  std::vector<std::string> nadd_numerals, nmul_numerals;
  auto* nadd = app.add_subcommand("num-add", "digit-wise m-ary addition of m numerals");
  nadd_ring.attach(nadd);
  nadd->add_option("--numeral", nadd_numerals, "numeral text, repeated m times")->required();
  auto* nmul = app.add_subcommand("num-mul", "n-ary product of n numerals, re-encoded when representable");
  nmul_ring.attach(nmul);
  nmul->add_option("--numeral", nmul_numerals, "numeral text, repeated n times")->required();
  auto parse_all = [](const PolyadicRing& ring, const std::vector<std::string>& texts) {
    std::vector<Numeral> nums;
    for (const auto& t : texts) nums.push_back(parse_numeral(ring, t));
    return nums;
  };
  commands.emplace_back(nadd, [&] {
    const auto ring = nadd_ring.ring();
    const auto sum = add_numerals(ring, parse_all(ring, nadd_numerals));
    const auto value = evaluate(sum);
    Json j{{"ring", to_string(ring)}, {"digits", elements_json(sum.digits)}, {"base", to_decimal(sum.base.value())}};
    j.update(element_json(value));
    print(out, j);
  });
  commands.emplace_back(nmul, [&] {
    const auto ring = nmul_ring.ring();
    const auto product = mul_numerals(ring, parse_all(ring, nmul_numerals));
    Json j{{"ring", to_string(ring)}};
    j.update(element_json(product.product));
    j["numeral"] = product.encoding ? Json(format_numeral(*product.encoding)) : Json(nullptr);
    print(out, j);
  });

  if (!args.empty() && !args.front().starts_with("-") && !app.get_subcommand_no_throw(args.front())) {
    err << "usage error: unknown subcommand '" << args.front() << "'\n";
    return kExitUsageError;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  }

  try {
    for (auto& [sub, run] : commands) {
      if (sub->parsed()) run();
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const Error& e) {
    err << Json{{"error", std::string(e.name())}, {"message", e.detail()}}.dump() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << Json{{"error", "InternalError"}, {"message", e.what()}}.dump() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace polyarith
