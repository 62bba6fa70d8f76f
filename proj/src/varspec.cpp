#include <set>

#include "sodlab/poly.hpp"

namespace sodlab {

VarSpec::VarSpec(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() != weights_.size())
        throw Error(ErrorKind::InvalidInput, "one weight per variable is required");
    std::set<std::string> seen;
    for (const auto& name : names_)
        if (!seen.insert(name).second)
            throw Error(ErrorKind::InvalidInput, "duplicate variable name " + name);
    for (int w : weights_)
        if (w < 1) throw Error(ErrorKind::InvalidInput, "variable weights must be positive");
}

std::shared_ptr<const VarSpec> VarSpec::make(std::vector<std::string> names,
                                             std::vector<int> weights) {
    return std::make_shared<const VarSpec>(std::move(names), std::move(weights));
}

std::shared_ptr<const VarSpec> VarSpec::unit(std::vector<std::string> names) {
    std::vector<int> weights(names.size(), 1);
    return make(std::move(names), std::move(weights));
}

std::shared_ptr<const VarSpec> VarSpec::numbered(const std::string& prefix, int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return unit(std::move(names));
}

int VarSpec::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

}  // namespace sodlab
