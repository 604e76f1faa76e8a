#include "ncsurf/assembly.hpp"

namespace ncsurf {

namespace {

// Memoized powers of the tree series.
class PowerCache {
 public:
  explicit PowerCache(const TreeGFSet& gfs) : gfs_(gfs) {}

  const TruncatedSeries& get(int which, int k) {
    auto key = std::make_pair(which, k);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    TruncatedSeries value = k == 0   ? TruncatedSeries::constant(gfs_.order(), 1, gfs_.T.u_order())
                            : k == 1 ? base(which)
                                     : get(which, k - 1) * base(which);
    return cache_.emplace(key, std::move(value)).first->second;
  }

 private:
  const TruncatedSeries& base(int which) const {
    switch (which) {
      case 0: return gfs_.T1;
      case 1: return gfs_.T2;
      case 2: return gfs_.T3;
      case 3: return gfs_.S;
      case 4: return gfs_.B;
      case 5: return gfs_.Sdot;
      default: return gfs_.Bdot;
    }
  }

  const TreeGFSet& gfs_;
  std::map<std::pair<int, int>, TruncatedSeries> cache_;
};

TruncatedSeries contribution(const ContributionSignature& sig, const TreeGFSet& gfs, PowerCache& cache) {
  const int N = gfs.order();
  const int M = gfs.T.u_order();
  const TruncatedSeries u = M == 0 ? TruncatedSeries::constant(N, 1) : TruncatedSeries::u(N, M);
  if (sig.degenerate) return u * gfs.S * gfs.B + TruncatedSeries::constant(N, 1, M);

  TruncatedSeries out = M == 0 ? TruncatedSeries::constant(N, 1)
                               : TruncatedSeries::monomial(N, M, 0, sig.v1);
  const std::array<int, 7> exps = {sig.e1, sig.e2, sig.e3, sig.block_excess,
                                   sig.nonblock_excess, sig.b, sig.w};
  for (int i = 0; i < 7; ++i) {
    if (exps[static_cast<std::size_t>(i)] < 0) throw Error("negative exponent in scheme contribution");
    if (exps[static_cast<std::size_t>(i)] > 0) out = out * cache.get(i, exps[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace

ContributionSignature ContributionSignature::of(const Scheme& sch) {
  ContributionSignature sig;
  if (sch.degenerate) {
    sig.degenerate = true;
    return sig;
  }
  const SchemeStats st = stats(sch);
  sig.v1 = st.v1;
  sig.e1 = st.e1;
  sig.e2 = st.e2;
  sig.e3 = st.e3;
  sig.block_excess = st.block_excess;
  sig.nonblock_excess = st.nonblock_excess;
  sig.b = st.b;
  sig.w = st.w;
  return sig;
}

TruncatedSeries signature_contribution(const ContributionSignature& sig, const TreeGFSet& gfs) {
  PowerCache cache(gfs);
  return contribution(sig, gfs, cache);
}

TruncatedSeries scheme_contribution(const Scheme& sch, const TreeGFSet& gfs) {
  return signature_contribution(ContributionSignature::of(sch), gfs);
}

Rational SurfaceSeries::coeff_at_one(int n) const {
  Rational sum = 0;
  for (int m = 0; m <= series.u_order(); ++m) sum += series.coeff(n, m);
  return sum;
}

SurfaceSeries p_series(const Surface& s, std::vector<Scheme> schemes, const TreeGFSet& gfs) {
  SurfaceSeries out;
  out.surface = s;
  out.series = TruncatedSeries(gfs.order(), gfs.T.u_order());
  out.schemes = std::move(schemes);

  std::map<ContributionSignature, int> index;
  std::vector<long> multiplicity;
  for (const Scheme& sch : out.schemes) {
    const ContributionSignature sig = ContributionSignature::of(sch);
    auto [it, inserted] = index.emplace(sig, static_cast<int>(out.signatures.size()));
    if (inserted) {
      out.signatures.push_back(sig);
      multiplicity.push_back(0);
    }
    ++multiplicity[static_cast<std::size_t>(it->second)];
    out.scheme_signature.push_back(it->second);
  }

  PowerCache cache(gfs);
  for (std::size_t i = 0; i < out.signatures.size(); ++i) {
    out.signature_series.push_back(contribution(out.signatures[i], gfs, cache));
    out.series += out.signature_series.back() * Rational(multiplicity[i]);
  }
  return out;
}

SurfaceSeries p_series(const Surface& s, int order, AssemblyOptions opts) {
  if (s.beta < 1) throw Error("counting requires at least one boundary component");
  std::vector<Scheme> schemes = opts.cubic_only ? enumerate_cubic_schemes(s) : enumerate_schemes(s);
  const TreeGFSet gfs = build_tree_gfs(order, opts.bivariate);
  return p_series(s, std::move(schemes), gfs);
}

}  // namespace ncsurf
