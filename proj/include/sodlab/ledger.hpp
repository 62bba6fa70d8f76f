#ifndef SODLAB_LEDGER_HPP
#define SODLAB_LEDGER_HPP

#include <optional>
#include <string>
#include <vector>

#include "sodlab/assembler.hpp"
#include "sodlab/cyclic.hpp"
#include "sodlab/field.hpp"
#include "sodlab/partitions.hpp"
#include "sodlab/poly.hpp"

namespace sodlab {

constexpr int kMaxLedgerSymbols = 6;

struct LedgerEntry {
    std::string source;
    long value = 0;
    std::string method;
};

struct LedgerVerdict {
    long pieces_total = 0;
    std::optional<long> oracle_total;
    bool pass = false;
    std::vector<std::string> strata_errors;
    std::vector<LedgerEntry> piece_entries;
    std::vector<LedgerEntry> oracle_entries;
};

/// Topological Euler characteristic of a smooth degree-d hypersurface in P^m.
long euler_smooth_hypersurface(int d, int m);

/// A joint eigenspace of <g, h> acting on C^n by permuting coordinates.
struct EigenspaceDatum {
    /// chi(g) = zeta_N^{exponents[0]}, chi(h) = zeta_N^{exponents[1]}.
    std::vector<int> character;
    int field_order = 1;
    std::vector<std::vector<CycNum>> basis;
    std::size_t dim() const { return basis.size(); }
};

/// Decomposes C^n into joint eigenspaces of commuting g, h over Q(zeta_N),
/// N = lcm(ord g, ord h). Throws InvalidInput when gh != hg.
std::vector<EigenspaceDatum> joint_eigenspaces(const Permutation& g, const Permutation& h, int n);

/// Euler characteristic of the common fixed locus of <g, h> in P^{n-1} or in
/// P H(f). Throws UnsupportedStratum when an eigenspace restriction is
/// singular.
long fixed_locus_euler(const Permutation& g, const Permutation& h, int n, const std::optional<QPoly>& f);

struct StringyResult {
    long total = 0;
    /// One entry per conjugacy class: the Euler characteristic of X^g / C(g).
    std::vector<LedgerEntry> entries;
};

/// (1/|S_n|) * sum over commuting pairs of chi(X^<g,h>), for X = P^{n-1} or
/// X = P H(f). Runs in parallel, capped by SODLAB_THREADS.
StringyResult stringy_euler_detailed(const std::optional<QPoly>& f, int n);
long stringy_euler(const std::optional<QPoly>& f, int n);

/// Orbifold Euler characteristic of [X/G] for G = mu_{d_1} x ... x mu_{d_k}
/// acting diagonally on P^{k-1} or on P H(f).
long diagonal_orbifold_euler(const std::vector<int>& d, const std::optional<QPoly>& f = std::nullopt);

/// Euler characteristic of the fixed locus of g in P^{k-1} or P H(f).
long diagonal_fixed_locus_euler(const std::vector<int>& d, const std::vector<int>& g,
                                const std::optional<QPoly>& f = std::nullopt);

LedgerVerdict ledger_check(const DecompReport& report);
LedgerVerdict ledger_check(const CyclicProjectiveReport& report, const std::optional<QPoly>& f);

/// Worker count: SODLAB_THREADS when set, else hardware concurrency.
unsigned worker_count();

}  // namespace sodlab

#endif  // SODLAB_LEDGER_HPP
