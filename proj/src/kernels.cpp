#include "lieaut/kernels.hpp"

#include <omp.h>

#include <cstddef>

#include "lieaut/errors.hpp"

namespace lieaut::kernels {

namespace {

void jacobi_for_first_index(const LieAlgebra& g, std::size_t i, std::vector<JacobiResidual>& out) {
    const std::size_t n = g.dim();
    Rational acc;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t m = 0; m < n; ++m) {
                acc = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (sgn(g.c(i, j, k)) != 0 && sgn(g.c(k, l, m)) != 0) acc += g.c(i, j, k) * g.c(k, l, m);
                    if (sgn(g.c(j, l, k)) != 0 && sgn(g.c(k, i, m)) != 0) acc += g.c(j, l, k) * g.c(k, i, m);
                    if (sgn(g.c(l, i, k)) != 0 && sgn(g.c(k, j, m)) != 0) acc += g.c(l, i, k) * g.c(k, j, m);
                }
                if (sgn(acc) != 0) out.push_back({i, j, l, m, acc});
            }
}

bool mask_invariant(const std::vector<std::uint32_t>& support, std::uint32_t mask) {
    for (std::size_t j = 0; j < support.size(); ++j)
        if ((mask >> j) & 1u)
            if (support[j] & ~mask) return false;
    return true;
}

void check_scan_size(std::size_t n) {
    if (n > 31) throw Error("coordinate scan supports at most 31 coordinates");
}

}  // namespace

std::vector<JacobiResidual> jacobi_residuals_serial(const LieAlgebra& g) {
    std::vector<JacobiResidual> out;
    for (std::size_t i = 0; i < g.dim(); ++i) jacobi_for_first_index(g, i, out);
    return out;
}

std::vector<JacobiResidual> jacobi_residuals_parallel(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<std::vector<JacobiResidual>> partial(n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        jacobi_for_first_index(g, static_cast<std::size_t>(i), partial[static_cast<std::size_t>(i)]);
    std::vector<JacobiResidual> out;
    for (auto& p : partial) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return out;
}

std::vector<std::uint32_t> invariant_coordinate_masks_serial(const std::vector<std::uint32_t>& column_support) {
    check_scan_size(column_support.size());
    const std::uint32_t count = 1u << column_support.size();
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < count; ++mask)
        if (mask_invariant(column_support, mask)) out.push_back(mask);
    return out;
}

std::vector<std::uint32_t> invariant_coordinate_masks_parallel(const std::vector<std::uint32_t>& column_support) {
    check_scan_size(column_support.size());
    const std::int64_t count = std::int64_t{1} << column_support.size();
    std::vector<char> hit(static_cast<std::size_t>(count), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t mask = 0; mask < count; ++mask)
        hit[static_cast<std::size_t>(mask)] = mask_invariant(column_support, static_cast<std::uint32_t>(mask));
    std::vector<std::uint32_t> out;
    for (std::int64_t mask = 0; mask < count; ++mask)
        if (hit[static_cast<std::size_t>(mask)]) out.push_back(static_cast<std::uint32_t>(mask));
    return out;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> upper_pairs(std::size_t m) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    return pairs;
}

void residuals_for_pair(const LieAlgebra& g, const std::vector<Poly>& a, const VarList& vars, std::size_t i,
                        std::size_t j, Poly* out) {
    const std::size_t n = g.dim();
    auto entry = [&](std::size_t r, std::size_t c) -> const Poly& { return a[r * n + c]; };
    for (std::size_t k = 0; k < n; ++k) {
        Poly acc(vars);
        for (std::size_t l = 0; l < n; ++l)
            if (sgn(g.c(i, j, l)) != 0 && !entry(k, l).is_zero()) acc += g.c(i, j, l) * entry(k, l);
        for (std::size_t p = 0; p < n; ++p) {
            if (entry(p, i).is_zero()) continue;
            for (std::size_t q = 0; q < n; ++q)
                if (sgn(g.c(p, q, k)) != 0 && !entry(q, j).is_zero())
                    acc -= g.c(p, q, k) * (entry(p, i) * entry(q, j));
        }
        out[k] = std::move(acc);
    }
}

}  // namespace

std::vector<Poly> structure_residuals_serial(const LieAlgebra& g, const std::vector<Poly>& entries,
                                             const VarList& vars) {
    const std::size_t n = g.dim();
    const auto pairs = upper_pairs(n);
    std::vector<Poly> out(pairs.size() * n);
    for (std::size_t p = 0; p < pairs.size(); ++p)
        residuals_for_pair(g, entries, vars, pairs[p].first, pairs[p].second, out.data() + p * n);
    return out;
}

std::vector<Poly> structure_residuals_parallel(const LieAlgebra& g, const std::vector<Poly>& entries,
                                               const VarList& vars) {
    const std::size_t n = g.dim();
    const auto pairs = upper_pairs(n);
    std::vector<Poly> out(pairs.size() * n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(pairs.size()); ++p) {
        const auto idx = static_cast<std::size_t>(p);
        residuals_for_pair(g, entries, vars, pairs[idx].first, pairs[idx].second, out.data() + idx * n);
    }
    return out;
}

std::vector<PolyVectorField> bracket_table_serial(const std::vector<PolyVectorField>& fields) {
    std::vector<PolyVectorField> out;
    for (auto [i, j] : upper_pairs(fields.size())) out.push_back(lie_bracket(fields[i], fields[j]));
    return out;
}

std::vector<PolyVectorField> bracket_table_parallel(const std::vector<PolyVectorField>& fields) {
    const auto pairs = upper_pairs(fields.size());
    std::vector<PolyVectorField> out(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(pairs.size()); ++p) {
        const auto [i, j] = pairs[static_cast<std::size_t>(p)];
        out[static_cast<std::size_t>(p)] = lie_bracket(fields[i], fields[j]);
    }
    return out;
}

}  // namespace lieaut::kernels
