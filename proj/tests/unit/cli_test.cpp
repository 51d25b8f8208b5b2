#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "catalan/cli/app.hpp"
#include "catalan/cli/certificate.hpp"

using namespace catalan;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

const char* const kAlternatingCatalan = "(-1)^i * binomial(2*i,i)/(i+1) * binomial(i+1, s-i)";
const char* const kNormalizedCatalanBinomial =
    "(-1)**k*binomial(2*k,k)/(k+1)*binomial(l-m+k,m-k)/binomial(l-m-1,m)";

struct Source {
  const char* text;
  const char* variable;
  std::vector<std::string> parameters;
  std::vector<long> sample = {};  // parameter values with a long nonzero stretch
};

std::vector<Source> corpus() {
  return {
      {kAlternatingCatalan, "i", {"s"}, {60}},
      {kNormalizedCatalanBinomial, "k", {"l", "m"}, {100, 40}},
      {"1", "k", {}},
      {"k*factorial(k)", "k", {}},
      {"binomial(n,k)^2", "k", {"n"}},
      {"2^k*(k^2 - 3*k + 1)", "k", {}},
      {"catalan(k)/4^k", "k", {}},
      {"-factorial(2*k+1)/(factorial(k)*(k+3)^2)", "k", {}},
      {"(-1)^(n-k)*binomial(n+k, 2*k)", "k", {"n"}},
      {"3^(-k)*binomial(a, k)/(a - k + 1/2 + 1/2)", "k", {"a"}},
  };
}

// Random product-form term over symbols s (parameter) and k (variable).
std::string random_term(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 7);
  std::uniform_int_distribution<int> small(-3, 3);
  auto linear = [&] {
    std::ostringstream o;
    o << small(rng) << "*k + " << small(rng) << "*s + " << small(rng);
    return o.str();
  };
  std::string out = pick(rng) % 2 ? "-" : "";
  const int count = 1 + pick(rng) % 4;
  for (int i = 0; i < count; ++i) {
    if (i) out += pick(rng) % 3 ? "*" : "/";
    switch (pick(rng)) {
      case 0: out += "binomial(" + linear() + ", " + linear() + ")"; break;
      case 1: out += "factorial(" + linear() + ")"; break;
      case 2: out += "catalan(" + linear() + ")"; break;
      case 3: out += "(-1)^(" + linear() + ")"; break;
      case 4: out += "2^(" + linear() + ")"; break;
      case 5: out += "(k + " + std::to_string(1 + pick(rng)) + ")^" + std::to_string(1 + pick(rng) % 3); break;
      case 6: out += "(k^2 + s*k + 1)"; break;
      default: out += std::to_string(1 + pick(rng)); break;
    }
  }
  return out;
}

std::string tmp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("parser accepts the verbatim summands") {
  const TermExpression e = parse_term(kAlternatingCatalan, "i", {"s"});
  CHECK(e.root.kind == ExprNode::Kind::Mul);
  CHECK(parse_term("1", "k", {}).root.kind == ExprNode::Kind::Integer);
  const TermExpression star = parse_term("2**k", "k", {});
  CHECK(star == parse_term("2^k", "k", {}));
}

TEST_CASE("precedence and associativity") {
  // ^ binds tighter than unary minus
  const auto neg = parse_term("-2^2", "k", {}).root;
  CHECK(neg.kind == ExprNode::Kind::Negate);
  CHECK(neg.children[0].kind == ExprNode::Kind::Pow);
  // ^ is right associative
  const auto pow = parse_term("2^3^2", "k", {}).root;
  CHECK(pow.children[1].kind == ExprNode::Kind::Pow);
  // * / left associative, below unary minus
  const auto div = parse_term("k/2*3", "k", {}).root;
  CHECK(div.kind == ExprNode::Kind::Mul);
  CHECK(div.children[0].kind == ExprNode::Kind::Div);
  CHECK(to_product(parse_term("-2^2", "k", {})).constant() == -4);
  CHECK(to_product(parse_term("2^3^2", "k", {})).constant() == 512);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_term("binomial(i^2, i)", "i", {});
    FAIL("expected a linearity error");
  } catch (const LinearityError& e) {
    CHECK(e.position() == 9);
    CHECK(e.argument() == "(i^2)");
  }
  try {
    parse_term("k + * 2", "k", {});
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("expected") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_term("binomial(k)", "k", {}), ParseError);
  CHECK_THROWS_AS(parse_term("gamma(k)", "k", {}), ParseError);
  CHECK_THROWS_AS(parse_term("q*k", "k", {}), ParseError);
  CHECK_THROWS_AS(parse_term("k^k", "k", {}), ParseError);
  CHECK_THROWS_AS(parse_term("factorial(k/2)", "k", {}), LinearityError);
  CHECK_THROWS_AS(parse_term("2^(k*k)", "k", {}), LinearityError);
  CHECK_THROWS_AS(parse_term("(k", "k", {}), ParseError);
  CHECK_THROWS_AS(parse_term("k $ 2", "k", {}), ParseError);
  CHECK_THROWS_AS(parse_term("factorial(k) + 1", "k", {}), ParseError);
  CHECK_THROWS_AS(parse_term("0*k", "k", {}), ParseError);
  CHECK_THROWS_AS(parse_term("k", "k", {"k"}), UsageError);
}

TEST_CASE("serialize then parse round-trips") {
  for (const auto& src : corpus()) {
    CAPTURE(std::string(src.text));
    const TermExpression e = parse_term(src.text, src.variable, src.parameters);
    const TermExpression again = parse_term(serialize(e), src.variable, src.parameters);
    CHECK(again == e);
    CHECK(serialize(again) == serialize(e));
  }
  std::mt19937 rng(2024);
  int accepted = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::string text = random_term(rng);
    CAPTURE(text);
    std::optional<TermExpression> e;
    try {
      e = parse_term(text, "k", {"s"});
    } catch (const ParseError&) {
      continue;  // zero constants and the like
    }
    ++accepted;
    CHECK(parse_term(serialize(*e), "k", {"s"}) == *e);
  }
  CHECK(accepted > 250);
}

TEST_CASE("ratio_of examples") {
  const Polynomial k = Polynomial::identity("k", {});
  const Polynomial one = k.constant_like(1);
  CHECK(ratio_of(parse_term("binomial(2*k,k)/(k+1)", "k", {}), "k") ==
        RationalFunction((k + k + one).scaled(2), k + one + one));
  CHECK(ratio_of(parse_term("(-1)^k", "k", {}), "k") == RationalFunction(k.constant_like(-1)));
  CHECK(ratio_of(parse_term("factorial(k)", "k", {}), "k") == RationalFunction(k + one));
}

TEST_CASE("ratio agrees with direct evaluation on 20 consecutive points") {
  std::mt19937 rng(7);
  std::vector<Source> sources = corpus();
  std::vector<std::string> random_texts;
  for (int i = 0; i < 40; ++i) random_texts.push_back(random_term(rng));
  int fixed_sources = static_cast<int>(sources.size());
  int random_with_window = 0;
  for (const auto& t : random_texts) sources.push_back({t.c_str(), "k", {"s"}});
  for (const auto& src : sources) {
    CAPTURE(std::string(src.text));
    std::optional<TermExpression> e;
    try {
      e = parse_term(src.text, src.variable, src.parameters);
    } catch (const ParseError&) {
      continue;
    }
    const FactorProduct product = to_product(*e);
    const RationalFunction ratio = ratio_of(*e, src.variable);
    std::vector<Integer> point(src.parameters.size(), Integer(0));
    for (std::size_t i = 0; i < point.size(); ++i) {
      point[i] = src.sample.empty() ? 31 + 2 * static_cast<long>(i) : src.sample[i];
    }
    const std::vector<Rational> params(point.begin(), point.end());
    point.emplace_back(0);
    int agreed = 0;
    for (long k0 = -10; k0 < 200 && agreed < 20; ++k0) {
      point.back() = k0;
      const auto a = product.evaluate(point);
      point.back() = k0 + 1;
      const auto b = product.evaluate(point);
      if (!a || !b || *a == 0) {
        agreed = 0;
        continue;
      }
      const auto r = ratio.map_coefficients(
          [&](const FieldElement& c) { return FieldElement(c.evaluate(params).value_or(Rational(0))); },
          CoefficientField{});
      const auto value = r.evaluate(FieldElement(Rational(k0)));
      if (!value) {
        agreed = 0;
        continue;
      }
      CHECK(value->rational_value() == *b / *a);
      ++agreed;
    }
    if (fixed_sources-- > 0) {
      CHECK(agreed == 20);
    } else if (agreed == 20) {
      ++random_with_window;
    }
  }
  // Random terms may vanish or be undefined almost everywhere; most are not.
  CHECK(random_with_window > 20);
}

TEST_CASE("certificates survive a disk round trip and are re-verified") {
  const TermExpression t1 = parse_term(kAlternatingCatalan, "i", {"s"});
  const auto cert = std::get<GosperCertificate>(gosper(hyper_term_of(t1)));
  const CertificateRecord g = make_gosper_record("identity1", t1, cert);
  CHECK(g.verified);
  CHECK(g.certificate == "(-s^2 + 4*s*i - 4*i^2 + s - 2*i)/(s^2 + s)");

  const TermExpression t3 = parse_term(kNormalizedCatalanBinomial, "k", {"l", "m"});
  const auto rec = std::get<TelescopedRecurrence>(zeilberger(bivariate_term_of(t3), 2));
  const CertificateRecord z = make_zeilberger_record("identity3", t3, rec);
  CHECK(z.verified);
  CHECK(z.recurrence == std::vector<std::string>{"-m - 1", "m + 2"});
  CHECK(z.inhomogeneous == "1");

  for (const CertificateRecord* r : {&g, &z}) {
    const CertificateRecord from_text = load_certificate(to_text(*r));
    CHECK(from_text.verified);
    CHECK(to_text(from_text) == to_text(*r));
    const CertificateRecord from_json = load_certificate(to_json(*r));
    CHECK(from_json.verified);
    CHECK(to_json(from_json) == to_json(*r));
  }

  // A file claiming success with a tampered certificate is rejected.
  CertificateRecord tampered = g;
  tampered.certificate = "(-s^2 + 4*s*i - 4*i^2 + s - 2*i)/(s^2 + s + 1)";
  REQUIRE(to_text(tampered).find("verdict: verified") != std::string::npos);
  const CertificateRecord loaded = load_certificate(to_text(tampered));
  CHECK(loaded.claimed_verdict == "verified");
  CHECK_FALSE(loaded.verified);

  CertificateRecord bumped = z;
  bumped.recurrence = {"-m", "m + 2"};
  CHECK_FALSE(load_certificate(to_text(bumped)).verified);
  CertificateRecord wrong_side = z;
  wrong_side.inhomogeneous = "2";
  CHECK_FALSE(load_certificate(to_text(wrong_side)).verified);

  CHECK_THROWS_AS(load_certificate("not a certificate"), UsageError);
  CHECK_THROWS_AS(load_certificate("{\"kind\": 3}"), UsageError);
}

TEST_CASE("cli: verify subcommands") {
  const Run r1 = run_cli({"verify", "identity1", "--s", "1..200"});
  CHECK(r1.status == kExitPass);
  CHECK(r1.out == "OK 200/200\n");
  const Run r0 = run_cli({"verify", "identity1", "--s", "0..3", "--serial"});
  CHECK(r0.status == kExitPass);
  CHECK(r0.out.find("exception identity1 s=0") != std::string::npos);
  const Run r3 = run_cli({"verify", "identity3", "--m", "0..12", "--l-offset", "0..12"});
  CHECK(r3.status == kExitPass);
  CHECK(r3.out == "OK 169/169\n");
  CHECK(run_cli({"verify", "identity2prime", "--l", "1..9", "--m", "1..9"}).status == kExitPass);
  CHECK(run_cli({"verify", "recurrenceA", "--l", "1..9", "--m", "1..9"}).status == kExitPass);
  CHECK(run_cli({"verify", "f-induction", "--l", "3..30"}).status == kExitPass);
  const Run json = run_cli({"--format", "json", "verify", "identity1", "--s", "1..5"});
  CHECK(json.out.find("\"status\": \"OK\"") != std::string::npos);
}

TEST_CASE("cli: involutions") {
  const Run t = run_cli({"involution", "trace", "--s", "2", "--creature", "(1,2)"});
  CHECK(t.status == kExitPass);
  CHECK(t.out == "(1,2)\n(1,(1,1))\n");
  CHECK(run_cli({"involution", "census", "--s", "5"}).status == kExitPass);
  CHECK(run_cli({"involution", "census", "--l", "6", "--m", "2"}).status == kExitPass);
  CHECK(run_cli({"involution", "trace", "--s", "3", "--creature", "(1,2)"}).status == kExitUsage);
}

TEST_CASE("cli: summation commands and exit codes") {
  const Run g = run_cli({"gosper", kAlternatingCatalan, "--var", "i", "--params", "s", "--upper", "s", "--check", "0..20"});
  CHECK(g.status == kExitPass);
  CHECK(g.out.find("telescoped value 0") != std::string::npos);
  CHECK(g.out.find("s=0: sum=1 (endpoint-singular") != std::string::npos);

  const Run no = run_cli({"gosper", "1/k"});
  CHECK(no.status == kExitCounterexample);
  CHECK(no.out.find("NOT GOSPER-SUMMABLE") != std::string::npos);

  const std::string path = tmp_path("catalan_cli_test_cert.txt");
  const Run z = run_cli({"zeilberger", kNormalizedCatalanBinomial, "--sumvar", "k", "--recvar", "m", "--params", "l",
                         "--max-order", "2", "--out", path});
  CHECK(z.status == kExitPass);
  CHECK(z.out.find("recurrence: (-m - 1)*f(m) + (m + 2)*f(m + 1) = 1") != std::string::npos);
  const Run check = run_cli({"certificate", "check", path});
  CHECK(check.status == kExitPass);
  CHECK(check.out.find("verdict: verified") != std::string::npos);

  std::string text;
  {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  text.replace(text.find("recurrence: -m - 1"), 18, "recurrence: -m - 2");
  {
    std::ofstream out(path);
    out << text;
  }
  CHECK(run_cli({"certificate", "check", path}).status == kExitCounterexample);
  std::filesystem::remove(path);

  CHECK(run_cli({"gosper", "binomial(i^2, i)", "--var", "i"}).status == kExitUsage);
  CHECK(run_cli({"verify", "nothing"}).status == kExitUsage);
  CHECK(run_cli({}).status == kExitUsage);
  CHECK(run_cli({"verify", "identity1", "--s", "1..x"}).status == kExitUsage);
  CHECK(run_cli({"certificate", "check", tmp_path("no_such_catalan_file")}).status == kExitUsage);
}
