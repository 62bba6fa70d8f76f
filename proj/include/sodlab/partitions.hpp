#ifndef SODLAB_PARTITIONS_HPP
#define SODLAB_PARTITIONS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sodlab {

/// A partition of n: non-increasing positive parts. Labels conjugacy classes
/// of S_n and the pieces of the decompositions built on top of them.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidInput unless parts are positive and non-increasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int n() const noexcept { return n_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Prefix sums padded with n up to length n.
    std::vector<int> prefix_sums() const;
    bool all_parts_distinct() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Part size -> multiplicity r_i; sizes with r_i = 0 are absent.
using ExponentialForm = std::map<int, int>;

/// Grading weights of the quotient chart; order is significant.
using WeightVector = std::vector<int>;

/// A permutation of {0,...,n-1} stored as its one-line image list.
/// Serialized 1-based, as the cycle notation in the reports.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// Builds from 1-based one-line notation.
    static Permutation from_one_line(const std::vector<int>& one_based);
    /// Builds from disjoint 1-based cycles on n symbols.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const noexcept { return images_; }
    std::vector<int> one_line() const;

    /// (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    Permutation inverse() const;
    bool is_identity() const;
    int order() const;
    std::string to_cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

enum class Dominance { Less, Greater, Equal, Incomparable };

const char* to_string(Dominance d);

std::vector<Partition> enumerate_partitions(int n);
ExponentialForm exponential_form(const Partition& lambda);
/// Compares mu against lambda: Less means mu is strictly dominated by lambda.
Dominance dominance_compare(const Partition& mu, const Partition& lambda);
/// Total order on partitions of n refining dominance, smallest first.
std::vector<Partition> sod_order(int n);
WeightVector ambient_weights(const Partition& lambda);
std::uint64_t centralizer_order(const Partition& lambda);
std::uint64_t factorial(int n);
/// n! / centralizer_order.
std::uint64_t class_size(const Partition& lambda);

Partition cycle_type(const Permutation& g);
/// The consecutive-blocks representative (1..l1)(l1+1..l1+l2)...
Permutation class_representative(const Partition& lambda);
/// Exhaustive; throws UnsupportedSize for more than 8 symbols.
std::vector<Permutation> centralizer_elements(const Permutation& g);
std::vector<Permutation> all_permutations(int n);

inline constexpr int kMaxExhaustiveSymbols = 8;

}  // namespace sodlab

#endif  // SODLAB_PARTITIONS_HPP
