#include "mjets/symbolic/param.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace mjets {

namespace {

class Registry {
public:
    static Registry& instance() {
        static Registry r;
        return r;
    }

    std::uint16_t intern(std::string_view name) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
        }
        std::unique_lock lock(mutex_);
        if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
        if (infos_.size() >= 65534) throw std::length_error("parameter registry full");
        infos_.push_back(classify_param_name(name));
        const auto id = static_cast<std::uint16_t>(infos_.size());
        ids_.emplace(std::string(name), id);
        return id;
    }

    const ParamInfo& info(std::uint16_t id) {
        std::shared_lock lock(mutex_);
        if (id == 0 || id > infos_.size()) throw std::out_of_range("invalid parameter id");
        // deque never relocates elements, so the reference outlives the lock
        return infos_[id - 1];
    }

private:
    std::shared_mutex mutex_;
    std::deque<ParamInfo> infos_;
    std::unordered_map<std::string, std::uint16_t> ids_;
};

bool valid_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

std::tuple<int, int, char, int, int, int, const std::string&> rank_key(const ParamInfo& p) {
    return {static_cast<int>(p.kind), p.order, p.slot, p.xexp, p.yexp, p.aux_index, p.name};
}

}  // namespace

ParamInfo classify_param_name(std::string_view name) {
    if (!valid_identifier(name)) throw std::invalid_argument("invalid parameter name '" + std::string(name) + "'");
    ParamInfo info;
    info.name = std::string(name);
    if (name == "pi") {
        info.kind = ParamKind::transcendental_pi;
        return info;
    }
    auto all_digits = [](std::string_view s) {
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return !s.empty();
    };
    if ((name[0] == 'a' || name[0] == 'b') && name.size() == 4 && all_digits(name.substr(1))) {
        info.kind = ParamKind::perturbation;
        info.slot = name[0];
        info.order = name[1] - '0';
        info.xexp = name[2] - '0';
        info.yexp = name[3] - '0';
        if (info.order < 1 || info.xexp + info.yexp < 1) {
            throw std::invalid_argument("perturbation parameter '" + std::string(name) +
                                        "' needs order >= 1 and no constant term");
        }
        return info;
    }
    if (name[0] == 'A' && all_digits(name.substr(1)) && name[1] != '0') {
        info.kind = ParamKind::auxiliary;
        info.aux_index = std::stoi(std::string(name.substr(1)));
        return info;
    }
    info.kind = ParamKind::family;
    return info;
}

Param::Param(std::string_view name) : id_(Registry::instance().intern(name)) {}

Param Param::perturbation(char slot, int order, int k, int l) {
    if ((slot != 'a' && slot != 'b') || order < 1 || order > 9 || k < 0 || l < 0 || k > 9 || l > 9) {
        throw std::invalid_argument("perturbation parameter out of range");
    }
    std::string s{slot};
    s += std::to_string(order);
    s += std::to_string(k);
    s += std::to_string(l);
    return Param(s);
}

Param Param::auxiliary(int k) {
    if (k < 1) throw std::invalid_argument("auxiliary index must be positive");
    return Param("A" + std::to_string(k));
}

const ParamInfo& Param::info() const { return Registry::instance().info(id_); }

int canonical_compare(std::uint16_t a, std::uint16_t b) {
    if (a == b) return 0;
    const auto& ia = Registry::instance().info(a);
    const auto& ib = Registry::instance().info(b);
    const auto ka = rank_key(ia);
    const auto kb = rank_key(ib);
    return ka < kb ? -1 : 1;
}

std::strong_ordering operator<=>(Param a, Param b) {
    const int c = canonical_compare(a.id(), b.id());
    return c <=> 0;
}

}  // namespace mjets
