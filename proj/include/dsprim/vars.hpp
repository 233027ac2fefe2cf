#ifndef DSPRIM_VARS_HPP
#define DSPRIM_VARS_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace dsprim {

/// Immutable ordered variable list shared by all polynomials of one ring.
class Vars {
public:
    explicit Vars(std::vector<std::string> names) : names_(std::move(names)) {
        for (size_t i = 0; i < names_.size(); ++i) {
            if (!index_.emplace(names_[i], i).second)
                throw std::invalid_argument("duplicate variable name: " + names_[i]);
        }
    }

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    bool contains(const std::string& n) const { return index_.count(n) != 0; }
    size_t index_of(const std::string& n) const {
        auto it = index_.find(n);
        if (it == index_.end()) throw std::invalid_argument("unknown variable: " + n);
        return it->second;
    }

    friend bool operator==(const Vars& a, const Vars& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, size_t> index_;
};

using VarsPtr = std::shared_ptr<const Vars>;

inline VarsPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const Vars>(std::move(names));
}

inline bool same_vars(const VarsPtr& a, const VarsPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace dsprim

#endif
