#include "lieaut/megaideal.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <functional>
#include <set>
#include <sstream>

#include "lieaut/errors.hpp"

namespace lieaut {

const LatticeMember* MegaidealLattice::find(const Subspace& s) const {
    for (const auto& m : members)
        if (m.space == s) return &m;
    return nullptr;
}

std::vector<Subspace> MegaidealLattice::spaces() const {
    std::vector<Subspace> out;
    for (const auto& m : members) out.push_back(m.space);
    return out;
}

Subspace prop34(const LieAlgebra& g, const Subspace& i0, const Subspace& i1, const Subspace& i2) {
    return bracket_preimage(g, i0, i1, i2);
}

std::string format_element(const LieAlgebra& g, std::span<const Rational> v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (sgn(v[k]) == 0) continue;
        Rational c = v[k];
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        c = abs(c);
        if (c != 1) os << c.get_str() << "*";
        os << g.basis_names()[k];
        first = false;
    }
    return first ? "0" : os.str();
}

Prop34Explanation explain_prop34(const LieAlgebra& g, const Subspace& i0, const Subspace& i1, const Subspace& i2) {
    Prop34Explanation ex{prop34(g, i0, i1, i2), {}};
    for (std::size_t r = 0; r < i0.dim(); ++r) {
        const Vector x = i0.basis().row_vector(r);
        if (ex.result.contains(x)) continue;
        for (std::size_t s = 0; s < i1.dim(); ++s) {
            const Vector b = i1.basis().row_vector(s);
            const Vector br = g.bracket(x, b);
            if (!i2.contains(br)) {
                ex.exclusions.push_back(format_element(g, x) + " excluded: [" + format_element(g, x) + ", " +
                                        format_element(g, b) + "] = " + format_element(g, br) +
                                        " is not in the target subspace");
                break;
            }
        }
    }
    return ex;
}

namespace {

struct Candidate {
    Subspace space;
    std::string provenance;
};

using Task = std::function<std::vector<Candidate>()>;

/// Members indexed by insertion id; the public lattice is sorted at the end.
class LatticeBuilder {
public:
    explicit LatticeBuilder(const LieAlgebra& g) : g_(g) {}

    bool add(const Subspace& s, const std::string& provenance) {
        for (auto& m : members_) {
            if (m.space == s) {
                if (provenance != m.provenance) {
                    ++m.alias_count;
                    if (m.aliases.size() < LatticeMember::kMaxAliases &&
                        std::find(m.aliases.begin(), m.aliases.end(), provenance) == m.aliases.end())
                        m.aliases.push_back(provenance);
                }
                return false;
            }
        }
        if (!is_ideal(g_, s)) throw Error("internal: constructed subspace " + s.to_string() + " is not an ideal");
        members_.push_back({s.with_provenance(provenance), provenance, {}, 0, true});
        return true;
    }

    std::size_t size() const { return members_.size(); }
    const LatticeMember& at(std::size_t id) const { return members_[id]; }
    std::vector<LatticeMember> take() { return std::move(members_); }

private:
    const LieAlgebra& g_;
    std::vector<LatticeMember> members_;
};

std::vector<Candidate> unary_on_algebra(const LieAlgebra& g) {
    std::vector<Candidate> out;
    for (auto&& s : derived_series(g).terms) out.push_back({s, s.provenance()});
    for (auto&& s : lower_central_series(g).terms) out.push_back({s, s.provenance()});
    for (auto&& s : upper_central_series(g).terms) out.push_back({s, s.provenance()});
    out.push_back({center(g), "Z(g)"});
    out.push_back({radical(g), "R(g)"});
    const auto nil = nilradical_approx(g);
    if (nil.status == NilradicalStatus::exact) out.push_back({nil.space, "N(g)"});
    return out;
}

/// Constructions of megaideals of the subalgebra `member`, lifted back to g.
std::vector<Candidate> unary_on_member(const LieAlgebra& g, const Subspace& member, const std::string& label) {
    const Restriction sub = restrict_to(g, member);
    std::vector<Candidate> out;
    auto push = [&](const Subspace& inner, const std::string& prov) {
        out.push_back({lift(inner, sub.embedding), prov});
    };
    std::size_t k = 1;
    for (auto&& s : upper_central_series(sub.algebra).terms) push(s, "Z" + std::to_string(k++) + "(" + label + ")");
    push(radical(sub.algebra), "R(" + label + ")");
    const auto nil = nilradical_approx(sub.algebra);
    if (nil.status == NilradicalStatus::exact) push(nil.space, "N(" + label + ")");
    return out;
}

std::vector<std::vector<Candidate>> run_tasks(const std::vector<Task>& tasks, bool parallel) {
    std::vector<std::vector<Candidate>> results(tasks.size());
    std::exception_ptr failure;
    const auto count = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
        try {
            results[static_cast<std::size_t>(t)] = tasks[static_cast<std::size_t>(t)]();
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace

MegaidealLattice closure(const LieAlgebra& g, const std::vector<Subspace>& seeds, const ClosureOptions& options) {
    const std::size_t n = g.dim();
    LatticeBuilder lat(g);
    lat.add(Subspace::zero(n), "0");
    lat.add(Subspace::full(n), "g");
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (!is_ideal(g, seeds[i])) throw NotAnIdeal("seed " + seeds[i].to_string() + " is not an ideal");
        lat.add(seeds[i], seeds[i].provenance().empty() ? "seed" + std::to_string(i + 1) : seeds[i].provenance());
    }

    std::set<std::string> done;
    MegaidealLattice result;
    bool first_pass = true;
    for (std::size_t pass = 0; pass < options.budget; ++pass) {
        const std::size_t snapshot = lat.size();
        std::vector<const LatticeMember*> m;
        for (std::size_t id = 0; id < snapshot; ++id) m.push_back(&lat.at(id));

        std::vector<Task> tasks;
        auto schedule = [&](std::string key, Task task) {
            if (done.insert(std::move(key)).second) tasks.push_back(std::move(task));
        };
        if (first_pass) schedule("unary:g", [&g] { return unary_on_algebra(g); });
        for (std::size_t a = 0; a < snapshot; ++a) {
            const Subspace& sa = m[a]->space;
            if (sa.is_zero() || sa.is_full()) continue;
            schedule("unary:" + std::to_string(a),
                     [&g, sa, label = m[a]->provenance] { return unary_on_member(g, sa, label); });
        }
        for (std::size_t a = 0; a < snapshot; ++a)
            for (std::size_t b = 0; b < snapshot; ++b) {
                const Subspace& sa = m[a]->space;
                const Subspace& sb = m[b]->space;
                const std::string& pa = m[a]->provenance;
                const std::string& pb = m[b]->provenance;
                const std::string key = std::to_string(a) + ":" + std::to_string(b);
                if (a <= b) {
                    schedule("br:" + key, [&g, sa, sb, pa, pb] {
                        return std::vector<Candidate>{{bracket_subspaces(g, sa, sb), "[" + pa + "," + pb + "]"}};
                    });
                    schedule("sum:" + key, [sa, sb, pa, pb] {
                        return std::vector<Candidate>{{sum(sa, sb), "(" + pa + ")+(" + pb + ")"}};
                    });
                    schedule("cap:" + key, [sa, sb, pa, pb] {
                        return std::vector<Candidate>{{intersect(sa, sb), "(" + pa + ")∩(" + pb + ")"}};
                    });
                }
                schedule("cent:" + key, [&g, sa, sb, pa, pb] {
                    return std::vector<Candidate>{{centralizer(g, sa, sb), "C(" + pa + ")(" + pb + ")"}};
                });
                schedule("norm:" + key, [&g, sa, sb, pa, pb] {
                    return std::vector<Candidate>{{normalizer(g, sa, sb), "N(" + pa + ")(" + pb + ")"}};
                });
            }
        for (std::size_t a = 0; a < snapshot; ++a)
            for (std::size_t b = 0; b < snapshot; ++b)
                for (std::size_t c = 0; c < snapshot; ++c) {
                    const Subspace& i0 = m[a]->space;
                    const Subspace& i1 = m[b]->space;
                    const Subspace& i2 = m[c]->space;
                    if (!options.full_prop34 && i2.dim() > i1.dim()) continue;
                    const std::string key =
                        "p34:" + std::to_string(a) + ":" + std::to_string(b) + ":" + std::to_string(c);
                    schedule(key, [&g, i0, i1, i2, p = "P34(" + m[a]->provenance + "," + m[b]->provenance + "," +
                                                        m[c]->provenance + ")"] {
                        return std::vector<Candidate>{{prop34(g, i0, i1, i2), p}};
                    });
                }
        first_pass = false;

        const auto results = run_tasks(tasks, options.parallel);
        bool added = false;
        for (const auto& batch : results)
            for (const auto& cand : batch) added = lat.add(cand.space, cand.provenance) || added;

        ++result.passes;
        if (added) {
            ++result.productive_passes;
        } else {
            result.fixpoint = true;
            break;
        }
    }
    result.budget_exceeded = !result.fixpoint;
    result.members = lat.take();
    std::stable_sort(result.members.begin(), result.members.end(),
                     [](const LatticeMember& a, const LatticeMember& b) { return canonical_less(a.space, b.space); });
    return result;
}

MegaidealLattice essential_filter(MegaidealLattice lattice) {
    auto& ms = lattice.members;
    auto proper = [](const Subspace& s) { return !s.is_zero() && !s.is_full(); };
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (!proper(ms[i].space)) continue;
        bool decomposable = false;
        for (std::size_t a = 0; a < ms.size() && !decomposable; ++a) {
            if (a == i || !proper(ms[a].space)) continue;
            for (std::size_t b = a + 1; b < ms.size() && !decomposable; ++b) {
                if (b == i || !proper(ms[b].space)) continue;
                decomposable = sum(ms[a].space, ms[b].space) == ms[i].space;
            }
        }
        ms[i].essential = !decomposable;
    }
    return lattice;
}

MegaidealVerdict verify_megaideal(const LieAlgebra& g, const Subspace& s) {
    MegaidealVerdict v;
    v.is_ideal = is_ideal(g, s);
    if (!v.is_ideal) v.notes.push_back("[g, s] is not contained in s");
    v.is_derivation_invariant = true;
    const auto ders = derivations(g);
    for (std::size_t d = 0; d < ders.size() && v.is_derivation_invariant; ++d)
        for (std::size_t r = 0; r < s.dim(); ++r)
            if (!s.contains(ders[d] * s.basis().row(r))) {
                v.is_derivation_invariant = false;
                v.notes.push_back("derivation " + std::to_string(d + 1) + " maps " +
                                  format_element(g, s.basis().row(r)) + " outside s");
                break;
            }
    v.notes.push_back("derivation invariance is necessary, not sufficient, for invariance under all automorphisms");
    return v;
}

}  // namespace lieaut
