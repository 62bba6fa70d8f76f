#include "sodlab/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sodlab/error.hpp"

namespace sodlab {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "invalid-input";
        case ErrorKind::UnsupportedSize: return "unsupported-size";
        case ErrorKind::ParseError: return "parse-error";
        case ErrorKind::DivisionByZero: return "division-by-zero";
        case ErrorKind::HypothesisFailure: return "hypothesis-failure";
        case ErrorKind::DegenerateCoefficient: return "degenerate-coefficient";
        case ErrorKind::UnsupportedStratum: return "unsupported-stratum";
        case ErrorKind::InternalError: return "internal-error";
    }
    return "unknown";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw Error(ErrorKind::InvalidInput, "partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error(ErrorKind::InvalidInput, "partition parts must be non-increasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::prefix_sums() const {
    std::vector<int> sums(static_cast<std::size_t>(n_), n_);
    int acc = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        acc += parts_[i];
        sums[i] = acc;
    }
    return sums;
}

bool Partition::all_parts_distinct() const {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw Error(ErrorKind::InvalidInput, "permutation images must be a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(const std::vector<int>& one_based) {
    std::vector<int> images;
    images.reserve(one_based.size());
    for (int v : one_based) images.push_back(v - 1);
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i] - 1;
            int to = cycle[(i + 1) % cycle.size()] - 1;
            if (from < 0 || from >= n || used[from])
                throw Error(ErrorKind::InvalidInput, "cycles must be disjoint and in range");
            used[from] = 1;
            images[from] = to;
        }
    }
    return Permutation(std::move(images));
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> out;
    out.reserve(images_.size());
    for (int v : images_) out.push_back(v + 1);
    return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::InvalidInput, "permutation sizes differ");
    std::vector<int> images(a.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = a.images_[b.images_[i]];
    Permutation out;
    out.images_ = std::move(images);
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) images[images_[i]] = static_cast<int>(i);
    Permutation out;
    out.images_ = std::move(images);
    return out;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

int Permutation::order() const {
    int result = 1;
    const Partition type = cycle_type(*this);
    for (int len : type.parts()) result = std::lcm(result, len);
    return result;
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream out;
    std::vector<char> seen(images_.size(), 0);
    bool any = false;
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start] || images_[start] == static_cast<int>(start)) continue;
        any = true;
        out << '(';
        std::size_t i = start;
        bool first = true;
        while (!seen[i]) {
            seen[i] = 1;
            if (!first) out << ' ';
            out << i + 1;
            first = false;
            i = static_cast<std::size_t>(images_[i]);
        }
        out << ')';
    }
    if (!any) out << "id";
    return out.str();
}

const char* to_string(Dominance d) {
    switch (d) {
        case Dominance::Less: return "leq";
        case Dominance::Greater: return "geq-only";
        case Dominance::Equal: return "equal";
        case Dominance::Incomparable: return "incomparable";
    }
    return "unknown";
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        enumerate_into(remaining - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be positive");
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate_into(n, n, current, out);
    return out;
}

ExponentialForm exponential_form(const Partition& lambda) {
    ExponentialForm form;
    for (int part : lambda.parts()) ++form[part];
    return form;
}

Dominance dominance_compare(const Partition& mu, const Partition& lambda) {
    if (mu.n() != lambda.n())
        throw Error(ErrorKind::InvalidInput, "dominance needs partitions of the same n");
    if (mu == lambda) return Dominance::Equal;
    auto a = mu.prefix_sums();
    auto b = lambda.prefix_sums();
    bool mu_below = true;
    bool mu_above = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) mu_below = false;
        if (a[i] < b[i]) mu_above = false;
    }
    if (mu_below) return Dominance::Less;
    if (mu_above) return Dominance::Greater;
    return Dominance::Incomparable;
}

std::vector<Partition> sod_order(int n) {
    auto parts = enumerate_partitions(n);
    // Prefix-sum vectors of distinct partitions differ, so the tie-break is
    // only reached for equal partitions.
    std::sort(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) {
        auto pa = a.prefix_sums();
        auto pb = b.prefix_sums();
        if (pa != pb) return pa < pb;
        return a.parts() < b.parts();
    });
    return parts;
}

WeightVector ambient_weights(const Partition& lambda) {
    WeightVector weights;
    for (const auto& [part, mult] : exponential_form(lambda))
        for (int j = 1; j <= mult; ++j) weights.push_back(j);
    return weights;
}

std::uint64_t factorial(int n) {
    if (n > 20) throw Error(ErrorKind::UnsupportedSize, "factorial overflows 64 bits");
    std::uint64_t out = 1;
    for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
    return out;
}

std::uint64_t centralizer_order(const Partition& lambda) {
    std::uint64_t z = 1;
    for (const auto& [part, mult] : exponential_form(lambda)) {
        for (int k = 0; k < mult; ++k) z *= static_cast<std::uint64_t>(part);
        z *= factorial(mult);
    }
    return z;
}

std::uint64_t class_size(const Partition& lambda) {
    return factorial(lambda.n()) / centralizer_order(lambda);
}

Partition cycle_type(const Permutation& g) {
    std::vector<int> lengths;
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    for (int start = 0; start < g.size(); ++start) {
        if (seen[start]) continue;
        int len = 0;
        for (int i = start; !seen[i]; i = g(i)) {
            seen[i] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

Permutation class_representative(const Partition& lambda) {
    std::vector<int> images(static_cast<std::size_t>(lambda.n()));
    int start = 0;
    for (int part : lambda.parts()) {
        for (int k = 0; k < part; ++k) images[start + k] = start + (k + 1) % part;
        start += part;
    }
    return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
    if (n > kMaxExhaustiveSymbols)
        throw Error(ErrorKind::UnsupportedSize,
                    "exhaustive enumeration limited to " +
                        std::to_string(kMaxExhaustiveSymbols) + " symbols");
    std::vector<Permutation> out;
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::vector<Permutation> centralizer_elements(const Permutation& g) {
    std::vector<Permutation> out;
    for (auto& h : all_permutations(g.size()))
        if (g * h == h * g) out.push_back(std::move(h));
    return out;
}

}  // namespace sodlab
