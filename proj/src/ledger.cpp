#include "sodlab/ledger.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "sodlab/idealcheck.hpp"

namespace sodlab {

namespace {

Permutation power(const Permutation& g, int k) {
    Permutation out = Permutation::identity(static_cast<int>(g.size()));
    for (int i = 0; i < k; ++i) out = g * out;
    return out;
}

/// Euler characteristic contributed by a linear subspace, given f restricted
/// to it (absent for projective space).
template <ComputableField Field>
long subspace_euler(std::size_t dim, const std::optional<Poly<Field>>& restricted, int degree,
                    const std::string& where) {
    if (!restricted || restricted->is_zero()) return static_cast<long>(dim);
    if (dim == 1) return 0;
    if (!projective_smooth(*restricted))
        throw Error(ErrorKind::UnsupportedStratum, "singular restriction of f to " + where);
    return euler_smooth_hypersurface(degree, static_cast<int>(dim) - 1);
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

int degree_of(const std::optional<QPoly>& f) { return f ? weighted_degree(*f).degree : 0; }

void require_smooth_input(const std::optional<QPoly>& f) {
    if (!f) return;
    if (!projective_smooth(*f)) throw Error(ErrorKind::HypothesisFailure, "smooth: P H(f) is singular");
}

}  // namespace

unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SODLAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) return std::min(hw, static_cast<unsigned>(cap));
    }
    return hw;
}

long euler_smooth_hypersurface(int d, int m) {
    if (d < 1 || m < 1) throw Error(ErrorKind::InvalidInput, "need d >= 1 and m >= 1");
    // Coefficient of h^{m-1} in (1+h)^{m+1} / (1+dh), times d.
    std::vector<mpz_class> binom(static_cast<std::size_t>(m) + 2, 0);
    binom[0] = 1;
    for (int i = 1; i <= m + 1; ++i)
        for (int k = i; k >= 1; --k) binom[static_cast<std::size_t>(k)] += binom[static_cast<std::size_t>(k) - 1];
    mpz_class coeff = 0, neg_d_pow = 1;
    for (int j = 0; j <= m - 1; ++j) {
        coeff += binom[static_cast<std::size_t>(m - 1 - j)] * neg_d_pow;
        neg_d_pow *= -d;
    }
    mpz_class chi = coeff * d;
    return chi.get_si();
}

std::vector<EigenspaceDatum> joint_eigenspaces(const Permutation& g, const Permutation& h, int n) {
    if (static_cast<int>(g.size()) != n || static_cast<int>(h.size()) != n)
        throw Error(ErrorKind::InvalidInput, "permutations must act on n points");
    if (!(g * h == h * g))
        throw Error(ErrorKind::InvalidInput,
                    "permutations " + g.to_cycle_string() + " and " + h.to_cycle_string() + " do not commute");
    const int og = g.order(), oh = h.order();
    const int N = std::lcm(og, oh);
    CyclotomicField F(N);

    // Distinct elements a = g^i h^j with one exponent pair each.
    struct Element {
        Permutation perm;
        int i, j;
    };
    std::vector<Element> elements;
    std::vector<std::pair<int, int>> relations{{og, 0}, {0, oh}};
    std::set<std::vector<int>> seen;
    for (int i = 0; i < og; ++i)
        for (int j = 0; j < oh; ++j) {
            Permutation a = power(g, i) * power(h, j);
            if (a.is_identity()) relations.emplace_back(i, j);
            if (seen.insert(a.one_line()).second) elements.push_back({a, i, j});
        }

    // Characters of A: pairs (alpha, beta) mod N vanishing on every relation.
    std::vector<std::pair<int, int>> characters;
    for (int alpha = 0; alpha < N; ++alpha)
        for (int beta = 0; beta < N; ++beta) {
            bool ok = std::all_of(relations.begin(), relations.end(), [&](const auto& r) {
                return (static_cast<long>(alpha) * r.first + static_cast<long>(beta) * r.second) % N == 0;
            });
            if (ok) characters.emplace_back(alpha, beta);
        }

    std::map<std::pair<int, int>, std::size_t> slot;
    std::vector<EigenspaceDatum> out;
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    for (int base = 0; base < n; ++base) {
        if (visited[static_cast<std::size_t>(base)]) continue;
        std::vector<std::pair<int, int>> stabilizer;
        for (const auto& e : elements) {
            visited[static_cast<std::size_t>(e.perm(base))] = 1;
            if (e.perm(base) == base) stabilizer.emplace_back(e.i, e.j);
        }
        for (const auto& [alpha, beta] : characters) {
            bool trivial = std::all_of(stabilizer.begin(), stabilizer.end(), [&](const auto& s) {
                return (static_cast<long>(alpha) * s.first + static_cast<long>(beta) * s.second) % N == 0;
            });
            if (!trivial) continue;
            std::vector<CycNum> v(static_cast<std::size_t>(n), F.zero());
            for (const auto& e : elements) {
                long exponent = -(static_cast<long>(alpha) * e.i + static_cast<long>(beta) * e.j);
                auto& coord = v[static_cast<std::size_t>(e.perm(base))];
                coord = F.add(coord, F.zeta_power(exponent));
            }
            auto [it, inserted] = slot.emplace(std::make_pair(alpha, beta), out.size());
            if (inserted) out.push_back({{alpha, beta}, N, {}});
            out[it->second].basis.push_back(std::move(v));
        }
    }
    return out;
}

long fixed_locus_euler(const Permutation& g, const Permutation& h, int n, const std::optional<QPoly>& f) {
    auto spaces = joint_eigenspaces(g, h, n);
    const int degree = degree_of(f);
    long total = 0;
    for (const auto& space : spaces) {
        std::optional<CycPoly> restricted;
        if (f) {
            CyclotomicField F(space.field_order);
            std::vector<std::string> names;
            for (std::size_t k = 0; k < space.dim(); ++k) names.push_back("y" + std::to_string(k + 1));
            auto yvars = VarSpec::unit(names);
            std::vector<CycPoly> images;
            for (int i = 0; i < n; ++i) {
                CycPoly xi(yvars, F);
                for (std::size_t k = 0; k < space.dim(); ++k) {
                    Exponents e(space.dim(), 0);
                    e[k] = 1;
                    xi.add_term(e, space.basis[k][static_cast<std::size_t>(i)]);
                }
                images.push_back(std::move(xi));
            }
            CycPoly lifted = embed(with_vars(*f, VarSpec::numbered("x", n)), F);
            restricted = substitute(lifted, images);
        }
        std::string where = "the eigenspace chi = (" + join_ints(space.character) + ") mod " +
                            std::to_string(space.field_order) + " of g = " + g.to_cycle_string() +
                            ", h = " + h.to_cycle_string();
        total += subspace_euler(space.dim(), restricted, degree, where);
    }
    return total;
}

StringyResult stringy_euler_detailed(const std::optional<QPoly>& f, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be positive");
    if (n > kMaxLedgerSymbols)
        throw Error(ErrorKind::UnsupportedSize, "commuting-pair enumeration supports n <= " +
                                                    std::to_string(kMaxLedgerSymbols) + ", got " + std::to_string(n));
    if (f && static_cast<int>(f->vars().size()) != n)
        throw Error(ErrorKind::InvalidInput, "polynomial must be over n variables");
    require_smooth_input(f);

    struct Task {
        Partition lambda;
        Permutation g;
        std::vector<Permutation> centralizer;
        long sum = 0;
    };
    std::vector<Task> tasks;
    for (const auto& lambda : sod_order(n)) {
        Permutation g = class_representative(lambda);
        tasks.push_back({lambda, g, centralizer_elements(g), 0});
    }

    // chi(X^A) depends only on the subgroup A = <g, h>.
    std::mutex cache_mutex;
    std::map<std::set<std::vector<int>>, long> cache;
    auto subgroup_key = [](const Permutation& g, const Permutation& h) {
        std::set<std::vector<int>> key;
        std::vector<Permutation> frontier{Permutation::identity(static_cast<int>(g.size()))};
        key.insert(frontier.front().one_line());
        while (!frontier.empty()) {
            Permutation a = frontier.back();
            frontier.pop_back();
            for (const Permutation& s : {g, h}) {
                Permutation b = s * a;
                if (key.insert(b.one_line()).second) frontier.push_back(b);
            }
        }
        return key;
    };

    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t t = 0; t < tasks.size(); ++t)
        for (std::size_t c = 0; c < tasks[t].centralizer.size(); ++c) jobs.emplace_back(t, c);
    std::vector<long> values(jobs.size(), 0);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t k = next.fetch_add(1);
            if (k >= jobs.size()) return;
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (failure) return;
            }
            try {
                const auto& task = tasks[jobs[k].first];
                const Permutation& h = task.centralizer[jobs[k].second];
                auto key = subgroup_key(task.g, h);
                {
                    std::lock_guard<std::mutex> lock(cache_mutex);
                    if (auto it = cache.find(key); it != cache.end()) {
                        values[k] = it->second;
                        continue;
                    }
                }
                long chi = fixed_locus_euler(task.g, h, n, f);
                values[k] = chi;
                std::lock_guard<std::mutex> lock(cache_mutex);
                cache.emplace(std::move(key), chi);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned threads = std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, jobs.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    for (std::size_t k = 0; k < jobs.size(); ++k) tasks[jobs[k].first].sum += values[k];

    StringyResult result;
    for (const auto& task : tasks) {
        const long order = static_cast<long>(task.centralizer.size());
        if (task.sum % order != 0)
            throw Error(ErrorKind::InternalError, "non-integral sector contribution " + std::to_string(task.sum) +
                                                      "/" + std::to_string(order) + " for " +
                                                      task.lambda.to_string());
        long value = task.sum / order;
        result.total += value;
        result.entries.push_back({"oracle class " + task.lambda.to_string(), value,
                                  "average of chi over " + std::to_string(order) + " centralizer elements"});
    }
    return result;
}

long stringy_euler(const std::optional<QPoly>& f, int n) { return stringy_euler_detailed(f, n).total; }

long diagonal_fixed_locus_euler(const std::vector<int>& d, const std::vector<int>& g, const std::optional<QPoly>& f) {
    const std::size_t k = d.size();
    if (g.size() != k) throw Error(ErrorKind::InvalidInput, "element must have one exponent per factor");
    // Coordinates grouped by the eigenvalue exp(2 pi i n_i / d_i) of g.
    std::map<Rational, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < k; ++i) {
        Rational q(g[i], d[i]);
        q.canonicalize();
        groups[q].push_back(i);
    }
    long total = 0;
    for (const auto& [value, coords] : groups) {
        std::optional<QPoly> restricted;
        if (f) restricted = restrict_to_coordinates(*f, coords, std::vector<int>(k, 1));
        total += subspace_euler(coords.size(), restricted, degree_of(f),
                                "the fixed coordinate subspace of g = (" + join_ints(g) + ")");
    }
    return total;
}

long diagonal_orbifold_euler(const std::vector<int>& d, const std::optional<QPoly>& f) {
    if (d.empty()) throw Error(ErrorKind::InvalidInput, "need at least one factor");
    const std::size_t k = d.size();
    if (f) {
        if (f->vars().size() != k) throw Error(ErrorKind::InvalidInput, "polynomial must have one variable per factor");
        require_smooth_input(f);
    }
    long group_order = 1;
    for (int di : d) {
        if (di < 1) throw Error(ErrorKind::InvalidInput, "factor orders must be positive");
        group_order *= di;
    }
    std::vector<std::vector<int>> elements;
    std::vector<int> n(k, 0);
    while (true) {
        elements.push_back(n);
        std::size_t i = 0;
        while (i < k && ++n[i] == d[i]) n[i++] = 0;
        if (i == k) break;
    }

    std::map<std::vector<std::vector<std::size_t>>, long> cache;
    const std::vector<int> ones(k, 1);
    long total = 0;
    for (const auto& g : elements)
        for (const auto& h : elements) {
            std::map<std::pair<Rational, Rational>, std::vector<std::size_t>> groups;
            for (std::size_t i = 0; i < k; ++i) {
                Rational a(g[i], d[i]), b(h[i], d[i]);
                a.canonicalize();
                b.canonicalize();
                groups[{a, b}].push_back(i);
            }
            std::vector<std::vector<std::size_t>> key;
            for (const auto& [ch, coords] : groups) key.push_back(coords);
            std::sort(key.begin(), key.end());
            auto it = cache.find(key);
            if (it == cache.end()) {
                long chi = 0;
                for (const auto& coords : key) {
                    std::optional<QPoly> restricted;
                    if (f) restricted = restrict_to_coordinates(*f, coords, ones);
                    chi += subspace_euler(coords.size(), restricted, degree_of(f),
                                          "the coordinate subspace of g = (" + join_ints(g) + "), h = (" +
                                              join_ints(h) + ")");
                }
                it = cache.emplace(key, chi).first;
            }
            total += it->second;
        }
    if (total % group_order != 0)
        throw Error(ErrorKind::InternalError, "non-integral orbifold Euler characteristic " + std::to_string(total) +
                                                  "/" + std::to_string(group_order));
    return total / group_order;
}

LedgerVerdict ledger_check(const DecompReport& report) {
    LedgerVerdict verdict;
    bool complete = true;
    for (const auto& piece : report.pieces) {
        const auto& c = piece.classification;
        if (c.rank) {
            verdict.pieces_total += *c.rank;
            verdict.piece_entries.push_back({"piece " + piece.partition.to_string(), *c.rank, piece.label()});
        } else if (c.elliptic) {
            verdict.piece_entries.push_back({"piece " + piece.partition.to_string(), 0, "elliptic curve, Euler 0"});
        } else {
            complete = false;
            verdict.strata_errors.push_back("piece " + piece.partition.to_string() + " (" + piece.label() +
                                            ") carries no rank");
        }
    }
    try {
        auto oracle = stringy_euler_detailed(report.input, report.n);
        verdict.oracle_total = oracle.total;
        verdict.oracle_entries = std::move(oracle.entries);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnsupportedStratum) throw;
        verdict.strata_errors.push_back(e.what());
    }
    verdict.pass = complete && verdict.oracle_total && *verdict.oracle_total == verdict.pieces_total;
    return verdict;
}

LedgerVerdict ledger_check(const CyclicProjectiveReport& report, const std::optional<QPoly>& f) {
    LedgerVerdict verdict;
    bool complete = true;
    for (const auto& p : report.pieces) {
        std::string source = "piece g = (" + join_ints(p.piece.element.exponents) + ")";
        if (p.rank) {
            verdict.pieces_total += *p.rank;
            verdict.piece_entries.push_back({source, *p.rank, p.label});
        } else {
            complete = false;
            verdict.strata_errors.push_back(source + " (" + p.label + ") carries no rank");
        }
    }
    try {
        long oracle = diagonal_orbifold_euler(report.d, f);
        verdict.oracle_total = oracle;
        verdict.oracle_entries.push_back({"oracle", oracle, "average over all pairs of group elements"});
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnsupportedStratum) throw;
        verdict.strata_errors.push_back(e.what());
    }
    verdict.pass = complete && verdict.oracle_total && *verdict.oracle_total == verdict.pieces_total;
    return verdict;
}

}  // namespace sodlab
