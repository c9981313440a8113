#include "cm/postulates.hpp"

#include "cm/sat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cm {

long measure_value(Measure m, const KnowledgeBase &kb, Backend backend) {
  MeasureOptions options;
  options.backend = backend;
  const MeasureReport r = compute_measures(kb, {m}, options);
  switch (m) {
  case Measure::IMi: return static_cast<long>(*r.i_mi);
  case Measure::IM: return *r.i_m;
  case Measure::IMPrime: return static_cast<long>(*r.i_m_prime);
  case Measure::DeltaHs: return static_cast<long>(*r.delta_hs);
  case Measure::ID: return static_cast<long>(*r.i_d);
  }
  return 0;
}

KnowledgeBase rename_apart(const KnowledgeBase &kb, const std::vector<std::string> &taken) {
  const std::set<std::string> avoid(taken.begin(), taken.end());
  const auto own = kb.variables();
  std::string suffix = "_r";
  auto clashes = [&] {
    return std::any_of(own.begin(), own.end(), [&](const std::string &v) { return avoid.count(v + suffix) > 0; });
  };
  while (clashes()) suffix += "r";
  std::vector<Formula> out;
  for (const auto &f : kb.formulas()) out.push_back(f.renamed([&](const std::string &v) { return v + suffix; }));
  return KnowledgeBase(std::move(out));
}

bool PostulateReport::all_hold() const {
  return std::all_of(results.begin(), results.end(), [](const PostulateResult &r) { return r.holds(); });
}

namespace {

std::string describe(const KnowledgeBase &kb) {
  std::string s = "{";
  for (std::size_t i = 0; i < kb.size(); ++i) {
    if (i) s += ", ";
    s += to_string(kb.formulas()[i]);
  }
  return s + "}";
}

class Checker {
public:
  Checker(Measure m, std::size_t max_witnesses) : measure_(m), max_witnesses_(max_witnesses) {}

  long value(const KnowledgeBase &kb) const { return measure_value(measure_, kb); }

  void record(PostulateResult &r, bool ok, const std::string &witness) const {
    ++r.checks;
    if (ok) return;
    ++r.violations;
    if (r.witnesses.size() < max_witnesses_) r.witnesses.push_back(witness);
  }

private:
  Measure measure_;
  std::size_t max_witnesses_;
};

std::vector<IndexSet> mapped(const std::vector<IndexSet> &sets, const KnowledgeBase &from, const KnowledgeBase &to) {
  std::vector<IndexSet> out;
  for (const auto &s : sets) {
    std::vector<int> v;
    for (int i : s) v.push_back(*to.find(from[i]));
    out.emplace_back(std::move(v));
  }
  return out;
}

// The independent-decomposability precondition for a two-part union.
bool independent_parts(const KnowledgeBase &a, const KnowledgeBase &b, const KnowledgeBase &u) {
  const MusSet ma = enumerate_muses(a), mb = enumerate_muses(b), mu = enumerate_muses(u);
  auto fa = mapped(ma.muses, a, u), fb = mapped(mb.muses, b, u);
  canonicalize(fa);
  canonicalize(fb);
  for (const auto &m : fa)
    if (std::find(fb.begin(), fb.end(), m) != fb.end()) return false;
  std::vector<IndexSet> joined = fa;
  joined.insert(joined.end(), fb.begin(), fb.end());
  canonicalize(joined);
  if (joined != mu.muses) return false;
  const auto ua = mapped({classify_formulas(a, ma).unfree}, a, u);
  const auto ub = mapped({classify_formulas(b, mb).unfree}, b, u);
  return !ua.front().intersects(ub.front());
}

std::string fresh_variable(const KnowledgeBase &kb) {
  const auto vars = kb.variables();
  std::string name = "fresh";
  for (int k = 0; std::binary_search(vars.begin(), vars.end(), name); ++k) name = "fresh" + std::to_string(k);
  return name;
}

} // namespace

PostulateReport check_postulates(Measure measure, const std::vector<KnowledgeBase> &family,
                                 std::size_t max_witnesses) {
  PostulateReport report{measure, {}};
  PostulateResult consistency, monotony, free_ind, min_inc, ind_dec;
  consistency.name = "Consistency";
  monotony.name = "Monotony";
  free_ind.name = "Free Formula Independence";
  min_inc.name = "MinInc";
  ind_dec.name = "Independent Decomposability";
  const Checker check(measure, max_witnesses);
  const std::string mname = measure_name(measure);

  std::vector<long> values;
  for (const auto &kb : family) values.push_back(check.value(kb));

  for (std::size_t k = 0; k < family.size(); ++k) {
    const KnowledgeBase &kb = family[k];
    const long v = values[k];

    const bool consistent = is_subset_consistent(kb, kb.all_indices());
    check.record(consistency, (v == 0) == consistent,
                 mname + describe(kb) + " = " + std::to_string(v) + (consistent ? " on a consistent KB" : " on an inconsistent KB"));

    for (int i = 1; i <= static_cast<int>(kb.size()); ++i) {
      const KnowledgeBase smaller = kb.subset(kb.all_indices().minus(IndexSet{i}));
      const long vs = check.value(smaller);
      check.record(monotony, vs <= v,
                   mname + describe(smaller) + " = " + std::to_string(vs) + " > " + mname + describe(kb) + " = " + std::to_string(v));
    }

    const MusSet muses = enumerate_muses(kb);
    const Formula fresh = Formula::var(fresh_variable(kb));
    const KnowledgeBase with_fresh = kb.merged(KnowledgeBase({fresh}));
    const long vf = check.value(with_fresh);
    check.record(free_ind, vf == v,
                 mname + describe(with_fresh) + " = " + std::to_string(vf) + " != " + std::to_string(v));
    for (int i : classify_formulas(kb, muses).free) {
      const KnowledgeBase without = kb.subset(kb.all_indices().minus(IndexSet{i}));
      const long vw = check.value(without);
      check.record(free_ind, vw == v,
                   "removing free formula " + to_string(kb[i]) + " changes " + mname + " from " + std::to_string(v) + " to " + std::to_string(vw));
    }

    for (const auto &m : muses.muses) {
      const KnowledgeBase sub = kb.subset(m);
      const long vm = check.value(sub);
      check.record(min_inc, vm == 1, mname + describe(sub) + " = " + std::to_string(vm) + " on a MUS");
    }

    if (k + 1 < family.size()) {
      const KnowledgeBase &next = family[k + 1];
      const KnowledgeBase joined = kb.merged(next);
      const long vj = check.value(joined);
      check.record(monotony, vj >= v && vj >= values[k + 1],
                   mname + describe(joined) + " = " + std::to_string(vj) + " below a part");

      const KnowledgeBase renamed = rename_apart(next, kb.variables());
      const long vr = check.value(renamed);
      for (const auto *other : {&next, &renamed}) {
        const KnowledgeBase u = kb.merged(*other);
        if (!independent_parts(kb, *other, u)) continue;
        const long vo = other == &next ? values[k + 1] : vr;
        const long vu = other == &next ? vj : check.value(u);
        check.record(ind_dec, vu == v + vo,
                     mname + describe(u) + " = " + std::to_string(vu) + " != " + std::to_string(v) + " + " + std::to_string(vo));
      }
    }
  }
  report.results = {consistency, monotony, free_ind, min_inc, ind_dec};
  return report;
}

std::string format_postulate_report(const PostulateReport &report) {
  std::ostringstream out;
  out << "measure " << measure_name(report.measure) << "\n";
  for (const auto &r : report.results) {
    out << r.name << ": " << r.checks << " checks, ";
    if (r.holds()) {
      out << "no counterexample found\n";
      continue;
    }
    out << r.violations << " counterexamples\n";
    for (const auto &w : r.witnesses) out << "  " << w << "\n";
  }
  return out.str();
}

} // namespace cm
