// Acceptance suite: one PASS/FAIL line per criterion. All checks are exact
// (integer arithmetic, zero tolerance); the only numeric limits are the
// sweep bounds and time budgets pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "straightlaw/independence.hpp"
#include "straightlaw/relation_sweep.hpp"
#include "straightlaw/standard_monomials.hpp"
#include "straightlaw/straightening.hpp"
#include "support.hpp"

using namespace straightlaw;
using straightlaw::testkit::Gen;

namespace {

constexpr unsigned kRelationOracleN = 4;
constexpr unsigned kRelationSigmaN = 6;
constexpr unsigned kLaplaceN = 4;
constexpr unsigned kPairExhaustiveDim = 3;
constexpr unsigned kPairRandomDim = 4;
constexpr int kPairRandomCount = 1000;
constexpr unsigned kWordExhaustiveDim = 3;
constexpr unsigned kWordRandomDim = 4;
constexpr int kWordRandomCount = 200;
constexpr unsigned kIndependenceDim = 3;
constexpr unsigned kCompletenessN = 3;
constexpr double kPropertyBudgetSeconds = 10.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the first failure only.
class Check {
public:
    void expect(bool ok, const std::function<std::string()>& what) {
        ++checks_;
        if (!ok && first_failure_.empty()) first_failure_ = what();
        pass_ = pass_ && ok;
    }
    [[nodiscard]] Outcome outcome(const std::string& summary) const {
        std::ostringstream os;
        os << summary << "; " << checks_ << " checks";
        if (!pass_) os << "; first failure: " << first_failure_;
        return {pass_, os.str()};
    }

private:
    bool pass_ = true;
    std::size_t checks_ = 0;
    std::string first_failure_;
};

std::vector<Minor> minors_of(unsigned m, unsigned n, bool with_unit) {
    std::vector<Minor> out;
    for (unsigned p = with_unit ? 0 : 1; p <= std::min(m, n); ++p) {
        for (const auto& r : subsets_of_size(m, p)) {
            for (const auto& c : subsets_of_size(n, p)) out.push_back({r, c});
        }
    }
    return out;
}

Multiset merged(const IndexSet& a, const IndexSet& b) {
    const std::vector<IndexSet> both{a, b};
    return multiset_content(both);
}

Outcome relation_suite() {
    Check c;
    std::size_t instances = 0;
    for (unsigned n = 1; n <= kRelationSigmaN; ++n) {
        for (auto f : kAllFamilies) {
            const SweepReport r = sweep_relations(f, n, {n <= kRelationOracleN, true});
            instances += r.instances;
            c.expect(r.ok(), [&] {
                return std::string(family_name(f)) + " n=" + std::to_string(n) +
                       (r.failures.empty() ? std::string() : ": " + r.failures.front());
            });
            c.expect(r.sigma_run && (n > kRelationOracleN || r.oracle_run), [&] { return "route not run"; });
        }
    }
    return c.outcome(std::to_string(instances) + " relation instances, oracle n<=4, sigma n<=6");
}

Outcome laplace_suite() {
    Check c;
    std::size_t pairs = 0;
    for (unsigned n = 1; n <= kLaplaceN; ++n) {
        for (unsigned p = 0; p <= n; ++p) {
            for (const auto& a : subsets_of_size(n, p)) {
                for (const auto& b : subsets_of_size(n, p)) {
                    ++pairs;
                    const auto out = straighten_laplace(a, b, n);
                    const auto where = [&] { return a.to_string() + "|" + b.to_string() + " n=" + std::to_string(n); };
                    for (const auto& [k, coeff] : out.terms()) {
                        c.expect(is_good(k.first, n) && is_good(k.second, n), where);
                        c.expect(leq(k.first, a) && leq(k.second, b), where);
                    }
                    c.expect(expand(out) == expand_laplace({a, b, n}), where);
                }
            }
        }
    }
    return c.outcome(std::to_string(pairs) + " Laplace products, n<=4");
}

void check_pair(Check& c, const MinorPair& p, unsigned m, unsigned n) {
    const auto where = [&] { return p.first.to_string() + p.second.to_string(); };
    const PairCombination out = straighten_pair(p, m, n);
    c.expect(expand(out, m, n) == expand_minor(p.first, m, n) * expand_minor(p.second, m, n), where);
    if (leq(p.first, p.second)) return;
    const Multiset rows = merged(p.first.rows, p.second.rows);
    const Multiset cols = merged(p.first.cols, p.second.cols);
    for (const auto& [t, coeff] : out) {
        c.expect(less(t.first, p.first) && leq(t.first, t.second), where);
        c.expect(merged(t.first.rows, t.second.rows) == rows && merged(t.first.cols, t.second.cols) == cols, where);
    }
}

Outcome pair_suite() {
    Check c;
    std::size_t pairs = 0;
    for (unsigned m = 1; m <= kPairExhaustiveDim; ++m) {
        for (unsigned n = 1; n <= kPairExhaustiveDim; ++n) {
            const auto minors = minors_of(m, n, true);
            for (const auto& a : minors) {
                for (const auto& b : minors) {
                    check_pair(c, {a, b}, m, n);
                    ++pairs;
                }
            }
        }
    }
    Gen g(testkit::kSeed + 3);
    for (int i = 0; i < kPairRandomCount; ++i) {
        const unsigned m = g.uniform(1, kPairRandomDim);
        const unsigned n = g.uniform(1, kPairRandomDim);
        check_pair(c, {g.minor(m, n), g.minor(m, n)}, m, n);
        ++pairs;
    }
    return c.outcome(std::to_string(pairs) + " pairs (exhaustive m,n<=3, 1000 random m,n<=4)");
}

void check_word(Check& c, const MinorWord& w, unsigned m, unsigned n) {
    const auto where = [&] { return w.to_string(); };
    const WordCombination nf = normal_form(w, m, n);
    c.expect(expand(nf, m, n) == expand(w, m, n), where);
    const auto want = content(w);
    for (const auto& [t, coeff] : nf) {
        c.expect(is_standard(t), where);
        c.expect(content(t) == want, where);
    }
    c.expect(normal_form(nf, m, n) == nf, where);
}

Outcome normal_form_suite() {
    Check c;
    std::size_t words = 0;
    for (unsigned m = 1; m <= kWordExhaustiveDim; ++m) {
        for (unsigned n = 1; n <= kWordExhaustiveDim; ++n) {
            const auto minors = minors_of(m, n, false);
            for (const auto& a : minors) {
                check_word(c, MinorWord{{a}}, m, n);
                ++words;
                for (const auto& b : minors) {
                    check_word(c, MinorWord{{a, b}}, m, n);
                    ++words;
                }
            }
        }
    }
    Gen g(testkit::kSeed + 4);
    for (int i = 0; i < kWordRandomCount; ++i) {
        const unsigned m = g.uniform(1, kWordRandomDim);
        const unsigned n = g.uniform(1, kWordRandomDim);
        check_word(c, g.word(m, n, g.uniform(1, 3)), m, n);
        ++words;
    }
    return c.outcome(std::to_string(words) + " words (all r<=2 on m,n<=3, 200 random r<=3 on m,n<=4)");
}

Outcome independence_suite() {
    Check c;
    std::ostringstream counts;
    auto run = [&](unsigned m, unsigned n, unsigned r) {
        const IndependenceReport rep = verify_independence(m, n, r);
        const auto where = [&] {
            return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " r=" + std::to_string(r) +
                   " count=" + std::to_string(rep.standard_count) + " rank=" + std::to_string(rep.rank);
        };
        c.expect(rep.rank_equals_count(), where);
        c.expect(rep.witnesses_distinct, where);
        c.expect(rep.decode_inverts, where);
        return rep.standard_count;
    };
    for (unsigned m = 1; m <= kIndependenceDim; ++m) {
        for (unsigned n = 1; n <= kIndependenceDim; ++n) counts << (m == 1 && n == 1 ? "" : " ") << run(m, n, 2);
    }
    counts << "; m=n=2 r<=3: " << run(2, 2, 3);
    return c.outcome("standard monomials with r<=2 per (m,n): " + counts.str());
}

Outcome completeness_suite() {
    Check c;
    std::ostringstream dims;
    for (unsigned n = 1; n <= kCompletenessN; ++n) {
        const CompletenessReport r = verify_relation_completeness(n);
        const auto where = [&] { return "n=" + std::to_string(n); };
        c.expect(r.span_rank == r.good_pairs, where);
        c.expect(r.good_rank == r.good_pairs, where);
        c.expect(r.all_straightened, where);
        c.expect(r.within_relation_span, where);
        c.expect(r.complete(), where);
        dims << (n == 1 ? "" : ", ") << "n=" << n << ": span " << r.span_rank << " = good " << r.good_pairs;
    }
    return c.outcome(dims.str());
}

Outcome property_suite() {
    const auto start = std::chrono::steady_clock::now();
    Check c;

    for (unsigned n = 0; n <= 6; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const IndexSet a = IndexSet::from_mask(mask);
            std::vector<unsigned> seq = a.elements();
            for (unsigned e : complement(a, n)) seq.push_back(e);
            c.expect(perm_sign_front(a, n).value() == testkit::inversion_sign(seq), [&] { return "sign " + a.to_string(); });
        }
    }

    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned p = 0; p <= n; ++p) {
            for (const auto& a : subsets_of_size(n, p)) {
                for (const auto& b : subsets_of_size(n, p)) {
                    c.expect(expand_laplace({a, b, n}) == testkit::poly_det(testkit::masked_matrix(a, b, n)),
                             [&] { return "masked determinant " + a.to_string() + "|" + b.to_string(); });
                }
            }
        }
    }

    Gen g(testkit::kSeed + 7);
    for (int trial = 0; trial < 500; ++trial) {
        const IndexSet u1 = g.subset(5);
        const IndexSet u2 = g.subset(5);
        const MergeMap f = merge_map(u1, u2);
        const auto where = [&] { return "merge map " + u1.to_string() + " " + u2.to_string(); };
        c.expect(f.image(f.kprime) == u1 && f.image(f.kdoubleprime) == u2, where);
        c.expect(f.kprime.united(f.kdoubleprime) == IndexSet::range(f.k) && f.kprime.intersected(f.kdoubleprime).empty(),
                 where);
        for (unsigned a = 1; a < f.k; ++a) {
            c.expect(f(a) <= f(a + 1), where);
            if (f(a) == f(a + 1)) c.expect(f.kprime.contains(a) && f.kdoubleprime.contains(a + 1), where);
        }
        for_each_subset(IndexSet::range(f.k), [&](const IndexSet& p) {
            if (f.injective_on(p) && less(p, f.kprime)) c.expect(less(f.image(p), f.image(f.kprime)), where);
        });
    }

    for (int trial = 0; trial < 2000; ++trial) {
        const unsigned k = g.uniform(1, 4);
        Monomial pu;
        Monomial pv;
        bool strict = false;
        for (unsigned i = 0; i < k; ++i) {
            Monomial u = g.monomial(3, 2);
            Monomial v = g.monomial(3, 2);
            if (compare_monomials(u, v) > 0) std::swap(u, v);
            strict = strict || compare_monomials(u, v) < 0;
            pu = pu * u;
            pv = pv * v;
        }
        if (strict) c.expect(compare_monomials(pu, pv) < 0, [&] { return "monotonicity " + pu.to_string(); });
    }

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(seconds < kPropertyBudgetSeconds, [&] { return "took " + std::to_string(seconds) + " s"; });
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f s of %.0f s budget", seconds, kPropertyBudgetSeconds);
    return c.outcome(buf);
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
        {"relation-suite", relation_suite},
        {"laplace-straightening-suite", laplace_suite},
        {"pair-straightening-suite", pair_suite},
        {"normal-form-suite", normal_form_suite},
        {"independence-suite", independence_suite},
        {"completeness", completeness_suite},
        {"structural-properties", property_suite},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %-28s [%.2fs] %s\n", o.pass ? "PASS" : "FAIL", name, seconds, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
