#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "aksw/ariki_koike.hpp"
#include "aksw/braiding.hpp"
#include "aksw/error.hpp"
#include "aksw/linalg.hpp"
#include "aksw/qgroup.hpp"
#include "aksw/specht.hpp"
#include "cli.hpp"

namespace aksw::cli {

namespace {

std::string rf(const RatFun& x) { return x.to_string(); }

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

Json levi_json(const std::vector<int>& levi) { return Json(levi); }

template <class Fn>
Section timed(const std::string& name, Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  Section s = fn();
  s.name = name;
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

int need_n(const RunConfig& cfg) {
  if (!cfg.n) throw UsageError("--n is required");
  if (*cfg.n < 1) throw UsageError("--n must be at least 1");
  return *cfg.n;
}

int need_d(const RunConfig& cfg, int fallback) {
  int d = cfg.d.value_or(cfg.levi ? static_cast<int>(cfg.levi->size()) : fallback);
  if (d < 1 || d > kMaxD) throw UsageError("--d must lie in 1.." + std::to_string(kMaxD));
  if (cfg.levi && static_cast<int>(cfg.levi->size()) != d) throw UsageError("--levi must have d entries");
  return d;
}

void check_algebra_size(int d, int n, std::size_t limit) {
  long double dim = static_cast<long double>(ipow(static_cast<std::uint64_t>(d), std::min(n, 20))) * factorial(std::min(n, 20));
  if (n > 20 || dim > static_cast<long double>(limit))
    throw ResourceRefusal("H(" + std::to_string(d) + "," + std::to_string(n) + ") has dimension above the limit " +
                          std::to_string(limit));
}

// ---------------------------------------------------------------------------

Section dims_section(int d, int n, const std::optional<std::vector<int>>& bounds) {
  Section s;
  Json shapes = Json::array();
  std::uint64_t sq = 0, quotient = 0, paths_ok = 1;
  for (const auto& mu : multipartitions(d, n)) {
    std::uint64_t dim = standard_tableaux(mu).size();
    std::uint64_t paths = path_count(mu);
    paths_ok &= dim == paths ? 1 : 0;
    sq += dim * dim;
    Json row = {{"shape", mu.to_string()}, {"dim", dim}, {"paths", paths}};
    if (bounds) {
      bool in = mu.fits(*bounds);
      row["in_bounds"] = in;
      if (in) quotient += dim * dim;
    }
    shapes.push_back(std::move(row));
  }
  const std::uint64_t expected = ipow(static_cast<std::uint64_t>(d), n) * factorial(n);
  s.results["shapes"] = std::move(shapes);
  s.results["sum_of_squares"] = sq;
  s.results["algebra_dim"] = expected;
  s.check("sum of squares equals d^n n!", sq == expected, {{"sum_of_squares", sq}, {"d^n n!", expected}});
  s.check("path counts equal tableau counts", paths_ok == 1);
  if (bounds) {
    std::uint64_t bounded = 0;
    for (const auto& mu : restricted_multipartitions(d, n, *bounds)) {
      std::uint64_t p = path_count(mu, *bounds);
      bounded += p * p;
    }
    s.results["quotient_dim"] = quotient;
    s.check("row quotient dimension from bounded paths", bounded == quotient,
            {{"from_shapes", quotient}, {"from_bounded_paths", bounded}});
  }
  return s;
}

Section specht_section(int d, int n) {
  Section s;
  auto p = generic_hecke_parameters(d);
  std::vector<std::string> order;
  std::map<std::string, Json> failures;
  std::map<std::string, bool> agg;
  bool jm = true, restriction = true;
  Json jm_witness = nullptr, res_witness = nullptr;
  std::size_t modules = 0, max_dim = 0;
  for (const auto& mu : multipartitions(d, n)) {
    SpechtModule<RatFun> v(mu, p);
    ++modules;
    max_dim = std::max(max_dim, v.dim());
    for (const auto& c : check_hecke_relations(v.generators(), p)) {
      auto [it, fresh] = agg.emplace(c.name, true);
      if (fresh) order.push_back(c.name);
      if (!c.holds && it->second) failures[c.name] = {{"shape", mu.to_string()}};
      it->second = it->second && c.holds;
    }
    auto x = jucys_murphy_recursive(v.generators());
    for (int i = 1; i <= n; ++i)
      if (!(x[static_cast<std::size_t>(i - 1)] == v.X(i)) && jm) {
        jm = false;
        jm_witness = {{"shape", mu.to_string()}, {"i", i}};
      }
    if (n >= 2) {
      auto nus = restrict_check(mu, p);
      std::set<MultiPartition> distinct(nus.begin(), nus.end());
      if ((nus.size() != removable_boxes(mu).size() || distinct.size() != nus.size()) && restriction) {
        restriction = false;
        res_witness = {{"shape", mu.to_string()}};
      }
    }
  }
  for (const auto& name : order) s.check(name, agg[name], failures.count(name) ? failures[name] : Json(nullptr));
  s.check("JM recursion matches tableau contents", jm, jm_witness);
  if (n >= 2) s.check("restriction spectra split by removable boxes", restriction, res_witness);
  s.results["modules"] = modules;
  s.results["max_dim"] = max_dim;
  return s;
}

Section ariki_koike_section(int d, int n) {
  Section s;
  ArikiKoike ak(d, n);
  const std::uint64_t expected = ipow(static_cast<std::uint64_t>(d), n) * factorial(n);
  const std::size_t r = basis_rank(ak);
  s.results["basis_words"] = ak_basis_words(d, n).size();
  s.results["basis_rank"] = r;
  s.check("basis words are linearly independent", r == expected, {{"rank", r}, {"d^n n!", expected}});
  for (const auto& c : center_check(ak)) s.check(c.name, c.holds);
  if (d >= 2 && n >= 2) {
    for (const auto& c : reljm_identity_check(ak)) s.check(c.name, c.holds);
    for (const auto& a : action_tau(ak))
      s.check("tau on " + a.shape.to_string(), a.vanishes == a.single_rows,
              {{"vanishes", a.vanishes}, {"single_rows", a.single_rows}});
  }
  return s;
}

Section blob_section(int d, int n) {
  Section s;
  ArikiKoike ak(d, n);
  BlobCertificate c = blob_theorem_check(ak);
  s.check("hypotheses at generic parameters", c.hypotheses);
  s.check("ideal(tau) closure reaches its block support", c.tau.consistent(),
          {{"support_rank", c.tau.subspace.rank()}, {"closure_rank", c.tau.closure_rank}});
  s.check("ideal(relJM) closure reaches its block support", c.reljm.consistent(),
          {{"support_rank", c.reljm.subspace.rank()}, {"closure_rank", c.reljm.closure_rank}});
  s.check("row-quotient kernel rank", c.kernel.kernel_rank() == c.kernel.subspace.rank(),
          {{"block_rank", c.kernel.subspace.rank()}, {"modular_rank", c.kernel.kernel_rank()}});
  s.check("ideal(tau) equals the row-quotient kernel", c.tau_equals_kernel,
          c.witness.empty() ? Json(nullptr) : Json(c.witness));
  s.check("ideal(relJM) equals ideal(tau)", c.reljm_equals_tau);
  for (const auto& r : reljm_identity_check(ak)) s.check(r.name, r.holds);
  for (const auto& a : action_tau(ak))
    s.check("tau on " + a.shape.to_string(), a.vanishes == a.single_rows,
            {{"vanishes", a.vanishes}, {"single_rows", a.single_rows}});
  s.results["ideal_rank"] = c.tau.subspace.rank();
  s.results["kernel_rank"] = c.kernel.subspace.rank();
  s.results["algebra_dim"] = ak.exact().algebra_dim();
  s.results["blob_dim"] = ak.exact().algebra_dim() - c.kernel.subspace.rank();
  return s;
}

std::vector<FWord> words_of_weight(const std::vector<int>& gamma) {
  FWord w;
  for (std::size_t i = 0; i < gamma.size(); ++i)
    for (int k = 0; k < gamma[i]; ++k) w.push_back(static_cast<int>(i) + 1);
  std::vector<FWord> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Section qgroup_section(const std::vector<int>& levi, int n) {
  Section s;
  const int m = sum(levi);
  const int depth = n * (m - 1) + 1;
  auto v = std::make_shared<StandardModule>(m);
  auto mod = std::make_shared<ParabolicVerma>(levi, depth);
  auto all = [&](const std::string& what, const std::vector<RelationCheck>& rs) {
    bool ok = true;
    Json bad = Json::array();
    for (const auto& r : rs)
      if (!r.holds) {
        ok = false;
        bad.push_back(r.name);
      }
    s.check(what, ok, ok ? Json(nullptr) : bad);
  };
  all("relations on V", check_qgroup_relations(*v));
  all("relations on M", check_qgroup_relations(*mod));
  all("relations on M x V", check_qgroup_relations(TensorModule(mod, v)));

  // Gram ranks of the contravariant form over all F-words, up to depth 3.
  bool gram_ok = true;
  Json gram_bad = nullptr;
  std::size_t checked = 0;
  for (const auto& w : mod->weights()) {
    const int k = mod->depth_of(w);
    if (k > std::min(depth, 3)) continue;
    std::vector<int> gamma(static_cast<std::size_t>(m - 1), 0);
    const Weight diff = mod->top() - w;
    int acc = 0;
    for (int i = 1; i < m; ++i) {
      acc += static_cast<int>(diff.c[static_cast<std::size_t>(i - 1)].constant);
      gamma[static_cast<std::size_t>(i - 1)] = acc;
    }
    auto words = words_of_weight(gamma);
    Matrix<RatFun> gram(words.size(), words.size());
    for (std::size_t a = 0; a < words.size(); ++a)
      for (std::size_t b = 0; b < words.size(); ++b) gram(a, b) = shapovalov_pair(words[a], words[b], mod->top());
    const std::size_t r = rank(gram);
    ++checked;
    if ((r != mod->dim(w) || r != kostant_count(levi, gamma)) && gram_ok) {
      gram_ok = false;
      gram_bad = {{"weight", w.to_string()}, {"gram_rank", r}, {"dim", mod->dim(w)}};
    }
  }
  s.check("Gram rank equals weight-space dimension and Kostant count", gram_ok, gram_bad);
  s.results["gram_weights_checked"] = checked;

  s.check("braiding table on V x V", braiding_table_check(m).holds);
  auto d1 = braiding_morphism_defect(mod, v);
  s.check("c_{M,V} is a module map", !d1, d1 ? Json(*d1) : Json(nullptr));
  auto d2 = braiding_morphism_defect(v, mod);
  s.check("c_{V,M} is a module map", !d2, d2 ? Json(*d2) : Json(nullptr));
  Json dr = Json::array();
  for (const auto& e : drinfeld_check(levi)) {
    s.check("Drinfeld scalar on summand " + std::to_string(e.component), e.matches(),
            {{"eigenvalue", rf(e.eigenvalue)}, {"scalar", rf(e.scalar)}});
    dr.push_back({{"weight", e.weight.to_string()}, {"eigenvalue", rf(e.eigenvalue)}, {"u", rf(e.u)}});
  }
  s.results["depth"] = depth;
  s.results["drinfeld"] = std::move(dr);
  return s;
}

// `u<k>` and `l<k>` are the cyclotomic parameters, `q<k>` is q^k.
RatFun parse_expr(const std::string& text) {
  return parse_ratfun(text, [](std::string_view id) -> std::optional<RatFun> {
    if (id.size() >= 2 && std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int k = std::stoi(std::string(id.substr(1)));
      if (id[0] == 'u' && k >= 1 && k <= kMaxD) return RatFun::lambda(k);
      if (id[0] == 'q') return RatFun::q().pow(k);
    }
    return std::nullopt;
  });
}

std::pair<int, RatFun> parse_substitution(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw UsageError("--specialize expects VAR=EXPR, got '" + text + "'");
  std::string var = text.substr(0, eq);
  int slot = -1;
  if (var == "q") {
    slot = 0;
  } else if (var.size() >= 2 && (var[0] == 'u' || var[0] == 'l') &&
             std::all_of(var.begin() + 1, var.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    slot = std::stoi(var.substr(1));
    if (slot < 1 || slot > kMaxD) slot = -1;
  }
  if (slot < 0) throw UsageError("cannot specialize '" + var + "'");
  try {
    return {slot, parse_expr(text.substr(eq + 1))};
  } catch (const ParseError& e) {
    throw UsageError(std::string("--specialize: ") + e.what());
  }
}

Section criterion_section(int d, int n, const std::vector<std::pair<int, RatFun>>& subs,
                          std::optional<std::uint64_t> prime) {
  Section s;
  auto p = generic_hecke_parameters(d);
  const RatFun crit = ariki_criterion(n, p.u, p.q);
  s.check("criterion is nonzero at generic parameters", !crit.is_zero());
  auto apply = [&](RatFun x) {
    for (const auto& [slot, value] : subs) x = substitute(x, slot, value);
    return x;
  };
  // Independent route: specialize each factor, then multiply.
  const RatFun q = p.q;
  RatFun by_factors(1);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int l = -n + 1; l < n; ++l)
        by_factors *= apply(q.pow(2 * l) * p.u[static_cast<std::size_t>(i)] - p.u[static_cast<std::size_t>(j)]);
  for (int i = 1; i <= n; ++i) {
    RatFun f(0);
    for (int k = 0; k < i; ++k) f += q.pow(2 * k);
    by_factors *= apply(f);
  }
  const RatFun value = apply(crit);
  s.check("specialization commutes with the product", value == by_factors);
  s.results["value"] = rf(value);
  s.results["semisimple"] = !value.is_zero();
  if (prime) {
    const ParamAssignment at = ParamAssignment::random_modular(*prime, 0xC417E41AULL);
    try {
      const Fp v = specialize_mod(value, at);
      s.results["prime"] = *prime;
      s.results["value_mod_p"] = v.value();
      s.results["semisimple_mod_p"] = !is_zero(v);
    } catch (const VanishingDenominator& e) {
      s.check("value defined mod p", false, Json(e.what()));
    }
  }
  return s;
}

Json base_config(const RunConfig& cfg) {
  Json c = Json::object();
  if (cfg.preset) c["preset"] = *cfg.preset;
  if (cfg.d) c["d"] = *cfg.d;
  if (cfg.n) c["n"] = *cfg.n;
  if (cfg.m) c["m"] = *cfg.m;
  if (cfg.levi) c["levi"] = levi_json(*cfg.levi);
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------

Report cmd_dims(const RunConfig& cfg) {
  const int n = need_n(cfg);
  const int d = need_d(cfg, 1);
  check_algebra_size(d, n, kMaxSpechtDim);
  if (cfg.levi)
    for (int b : *cfg.levi)
      if (b < 1) throw UsageError("row bounds must be positive");
  if (cfg.m && cfg.levi && sum(*cfg.levi) != *cfg.m) throw UsageError("--levi must sum to --m");
  Report r;
  r.command = "dims";
  r.config = {{"d", d}, {"n", n}};
  if (cfg.levi) r.config["levi"] = levi_json(*cfg.levi);
  r.sections.push_back(timed("dims", [&] { return dims_section(d, n, cfg.levi); }));
  return r;
}

Report cmd_verify(const RunConfig& cfg) {
  const int n = need_n(cfg);
  const int d = need_d(cfg, 2);
  std::vector<std::string> suites = cfg.suites;
  if (suites.empty()) {
    suites = {"dims", "specht", "ariki-koike"};
    if (d >= 2 && n >= 2) suites.push_back("blob");
  }
  static const std::set<std::string> known = {"dims", "specht", "ariki-koike", "blob", "qgroup", "ariki-criterion"};
  for (const auto& s : suites)
    if (!known.count(s)) throw UsageError("unknown suite '" + s + "'");
  const bool criterion = std::count(suites.begin(), suites.end(), "ariki-criterion") > 0;
  if (!cfg.specialize.empty() && !criterion) throw UsageError("--specialize applies to the ariki-criterion suite");
  if (cfg.prime && !criterion) throw UsageError("--prime applies to the ariki-criterion suite");

  // Validate and refuse before computing anything.
  std::vector<int> levi = cfg.levi.value_or(std::vector<int>(static_cast<std::size_t>(d), 1));
  for (int b : levi)
    if (b < 1) throw UsageError("Levi blocks must be positive");
  if (cfg.m && sum(levi) != *cfg.m) throw UsageError("--levi must sum to --m");
  std::vector<std::pair<int, RatFun>> subs;
  for (const auto& t : cfg.specialize) subs.push_back(parse_substitution(t));
  for (const auto& s : suites) {
    if (s == "specht" || s == "dims") check_algebra_size(d, n, kMaxSpechtDim);
    if (s == "ariki-koike" || s == "blob") check_algebra_size(d, n, kMaxAlgebraDim);
    if (s == "blob" && (d < 2 || n < 2)) throw UsageError("the blob suite needs d >= 2 and n >= 2");
    if (s == "qgroup" && tracked_dimension(levi, n) > cfg.max_dim)
      throw ResourceRefusal("qgroup suite: tracked dimension above --max-dim");
  }
  if (cfg.prime && (*cfg.prime < 3 || *cfg.prime >= (std::uint64_t{1} << 62)))
    throw UsageError("--prime must be an odd prime below 2^62");

  Report r;
  r.command = "verify";
  r.config = {{"d", d}, {"n", n}, {"suites", suites}};
  if (cfg.levi) r.config["levi"] = levi_json(levi);
  if (!cfg.specialize.empty()) r.config["specialize"] = cfg.specialize;
  if (cfg.prime) r.config["prime"] = *cfg.prime;

  std::vector<Section> out(suites.size());
  std::vector<std::function<Section()>> tasks;
  std::vector<std::size_t> parallel;
  for (std::size_t k = 0; k < suites.size(); ++k) {
    const std::string name = suites[k];
    std::function<Section()> task;
    if (name == "dims") task = [=] { return timed(name, [&] { return dims_section(d, n, cfg.levi); }); };
    if (name == "specht") task = [=] { return timed(name, [&] { return specht_section(d, n); }); };
    if (name == "ariki-koike") task = [=] { return timed(name, [&] { return ariki_koike_section(d, n); }); };
    if (name == "blob") task = [=] { return timed(name, [&] { return blob_section(d, n); }); };
    if (name == "qgroup") task = [=] { return timed(name, [&] { return qgroup_section(levi, n); }); };
    if (name == "ariki-criterion") {
      // Changes the process-wide modulus, so it runs alone before the others.
      std::optional<std::uint64_t> prime = cfg.prime;
      const std::uint64_t saved = Fp::modulus();
      if (prime) Fp::set_modulus(*prime);
      try {
        out[k] = timed(name, [&] { return criterion_section(d, n, subs, prime); });
      } catch (...) {
        Fp::set_modulus(saved);
        throw;
      }
      Fp::set_modulus(saved);
      continue;
    }
    tasks.push_back(std::move(task));
    parallel.push_back(k);
  }
  // Independent suites on a small worker pool; results land by index.
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  auto worker = [&] {
    for (std::size_t t; (t = next++) < tasks.size();) {
      try {
        out[parallel[t]] = tasks[t]();
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(tasks.size())));
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  r.sections = std::move(out);
  return r;
}

std::size_t tracked_dimension(const std::vector<int>& levi, int n) {
  const int m = sum(levi);
  // Multisets (as count vectors) of n indices for omega, all tuples for the slots.
  std::vector<std::vector<int>> multisets;
  std::vector<int> c(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == m - 1) {
      c[static_cast<std::size_t>(k)] = left;
      multisets.push_back(c);
      return;
    }
    for (int x = left; x >= 0; --x) {
      c[static_cast<std::size_t>(k)] = x;
      rec(k + 1, left - x);
    }
  };
  rec(0, n);
  // Slot tuples only matter through their counts; weight by n!/prod(c!).
  std::map<std::vector<int>, std::uint64_t> tuples;
  for (const auto& ms : multisets) {
    std::uint64_t mult = factorial(n);
    for (int x : ms) mult /= factorial(x);
    tuples[ms] = mult;
  }
  std::size_t total = 0;
  for (const auto& om : multisets)
    for (const auto& [sl, mult] : tuples) {
      // Lambda - wm = sum over slots - sum over omega, in alpha coordinates.
      std::vector<int> gamma(static_cast<std::size_t>(m - 1));
      int acc = 0;
      bool ok = true;
      for (int i = 0; i + 1 < m; ++i) {
        acc += sl[static_cast<std::size_t>(i)] - om[static_cast<std::size_t>(i)];
        gamma[static_cast<std::size_t>(i)] = acc;
        ok = ok && acc >= 0;
      }
      if (ok) total += mult * kostant_count(levi, gamma);
    }
  return total;
}

Report cmd_schur_weyl(const RunConfig& cfg) {
  const int n = need_n(cfg);
  std::vector<int> levi;
  std::string algebra;
  std::optional<std::uint64_t> named_dim;
  if (cfg.preset) {
    const std::string& p = *cfg.preset;
    if (cfg.levi) throw UsageError("--levi conflicts with --preset");
    if (p == "hecke-a") {
      if (cfg.d && *cfg.d != 1) throw UsageError("hecke-a has d = 1");
      int m = cfg.m.value_or(n);
      if (m < n) throw UsageError("hecke-a needs m >= n");
      levi = {m};
      algebra = "Hecke algebra of type A";
      named_dim = factorial(n);
    } else if (p == "temperley-lieb") {
      if ((cfg.d && *cfg.d != 1) || (cfg.m && *cfg.m != 2)) throw UsageError("temperley-lieb has d = 1, m = 2");
      levi = {2};
      algebra = "Temperley-Lieb algebra";
      named_dim = factorial(2 * n) / (factorial(n) * factorial(n + 1));
    } else if (p == "ariki-koike") {
      int d = need_d(cfg, 2);
      levi.assign(static_cast<std::size_t>(d), n);
      algebra = "Ariki-Koike algebra H(" + std::to_string(d) + "," + std::to_string(n) + ")";
      named_dim = ipow(static_cast<std::uint64_t>(d), n) * factorial(n);
    } else if (p == "hecke-b") {
      if (cfg.d && *cfg.d != 2) throw UsageError("hecke-b has d = 2");
      levi = {n, n};
      algebra = "Hecke algebra of type B";
      named_dim = ipow(2, n) * factorial(n);
    } else if (p == "blob") {
      int d = need_d(cfg, 2);
      levi.assign(static_cast<std::size_t>(d), 1);
      algebra = "generalized blob algebra B(" + std::to_string(d) + "," + std::to_string(n) + ")";
      // Sum over compositions of n into d parts of the squared multinomial.
      std::uint64_t total = 0;
      std::vector<int> a(static_cast<std::size_t>(d), 0);
      std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == d - 1) {
          a[static_cast<std::size_t>(k)] = left;
          std::uint64_t mult = factorial(n);
          for (int x : a) mult /= factorial(x);
          total += mult * mult;
          return;
        }
        for (int x = 0; x <= left; ++x) {
          a[static_cast<std::size_t>(k)] = x;
          rec(k + 1, left - x);
        }
      };
      rec(0, n);
      named_dim = total;
    } else {
      throw UsageError("unknown preset '" + p + "'");
    }
    if (cfg.m && sum(levi) != *cfg.m) throw UsageError("--m does not match the preset");
  } else {
    if (!cfg.levi) throw UsageError("schur-weyl needs --levi or --preset");
    levi = *cfg.levi;
    if (cfg.d && static_cast<int>(levi.size()) != *cfg.d) throw UsageError("--levi must have d entries");
    if (cfg.m && sum(levi) != *cfg.m) throw UsageError("--levi must sum to --m");
  }
  for (int b : levi)
    if (b < 1) throw UsageError("Levi blocks must be positive");
  if (static_cast<int>(levi.size()) > kMaxD) throw UsageError("at most " + std::to_string(kMaxD) + " Levi blocks");
  const std::size_t tracked = tracked_dimension(levi, n);
  if (tracked > cfg.max_dim)
    throw ResourceRefusal("tracked dimension " + std::to_string(tracked) + " exceeds --max-dim " +
                          std::to_string(cfg.max_dim));
  const int d = static_cast<int>(levi.size());
  check_algebra_size(d, n, kMaxAlgebraDim);

  Report r;
  r.command = "schur-weyl";
  r.config = base_config(cfg);
  r.config["d"] = d;
  r.config["m"] = sum(levi);
  r.config["levi"] = levi_json(levi);
  r.config["n"] = n;

  r.sections.push_back(timed("schur-weyl", [&] {
    Section s;
    SWReport sw = schur_weyl_verify(levi, n);
    for (const auto& rel : sw.relations) s.check("relation " + rel.name, rel.holds);
    for (const auto& c : sw.commutation) s.check("commutes " + c.name, c.holds);
    Json spectrum = Json::array();
    for (const auto& e : sw.drinfeld) {
      s.check("R0 eigenvalue on summand " + std::to_string(e.component), e.matches(),
              {{"eigenvalue", rf(e.eigenvalue)}, {"drinfeld_scalar", rf(e.scalar)}, {"u", rf(e.u)}});
      spectrum.push_back({{"component", e.component},
                          {"weight", e.weight.to_string()},
                          {"eigenvalue", rf(e.eigenvalue)},
                          {"drinfeld_scalar", rf(e.scalar)}});
    }
    Json shapes = Json::array();
    for (const auto& sh : sw.shapes) {
      const std::string tag = sh.shape.to_string();
      s.check("highest weight dimension " + tag, sh.hwv_dim == sh.expected,
              {{"dim", sh.hwv_dim}, {"paths", sh.expected}});
      s.check("JM spectrum " + tag, sh.spectrum_matches);
      s.check("isomorphic to V_mu " + tag, sh.intertwiner);
      Json spectrum_rows = Json::array();
      for (const auto& v : sh.spectrum) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(rf(x));
        spectrum_rows.push_back(std::move(row));
      }
      shapes.push_back({{"shape", tag},
                        {"weight", sh.weight.to_string()},
                        {"paths", sh.expected},
                        {"hwv_dim", sh.hwv_dim},
                        {"jm_spectrum", std::move(spectrum_rows)}});
    }
    Json stray = Json::array();
    for (const auto& [w, k] : sw.stray_hwv) stray.push_back({{"weight", w.to_string()}, {"dim", k}});
    s.check("no highest weight vectors off the Lambda_mu", sw.stray_hwv.empty(), stray.empty() ? Json(nullptr) : stray);
    s.check("total highest weight dimension equals sum of n_mu", sw.hwv_total == sw.hwv_expected,
            {{"total", sw.hwv_total}, {"expected", sw.hwv_expected}});
    s.check("image rank equals sum of n_mu^2", sw.image_rank == sw.expected_rank,
            {{"rank", sw.image_rank}, {"expected", sw.expected_rank}});
    s.check("kernel equals the row-quotient kernel", sw.kernel_matches,
            {{"kernel_rank", sw.kernel_rank}, {"quotient_kernel_rank", sw.quotient_kernel_rank}});
    if (sw.blob_ideal_matches) s.check("kernel equals ideal(tau)", *sw.blob_ideal_matches);
    if (named_dim)
      s.check("image rank equals dim of the " + algebra, sw.image_rank == *named_dim,
              {{"rank", sw.image_rank}, {"expected", *named_dim}});
    if (!sw.witnesses.empty()) s.results["witnesses"] = sw.witnesses;
    Json u = Json::array();
    for (const auto& x : sw.u) u.push_back(rf(x));
    if (!algebra.empty()) s.results["algebra"] = algebra;
    s.results["parameters"] = {{"q", "q"}, {"u", std::move(u)}};
    s.results["verma_depth"] = sw.depth;
    s.results["tracked_dim"] = sw.tracked_dim;
    s.results["r0_spectrum"] = std::move(spectrum);
    s.results["shapes"] = std::move(shapes);
    s.results["image_rank"] = sw.image_rank;
    s.results["kernel_rank"] = sw.kernel_rank;
    return s;
  }));
  return r;
}

}  // namespace aksw::cli
