#include "supschur/variable.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace supschur {

namespace {

/* Process-wide registry.  A deque keeps name references stable across
   insertions, so readers holding a shared lock can hand out references that
   stay valid forever. */
struct Registry {
    std::shared_mutex mutex;
    std::deque<std::string> names;
    std::unordered_map<std::string_view, std::uint32_t> index;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

Variable Variable::named(std::string_view name) {
    if (name.empty()) throw std::invalid_argument("Variable::named: empty name");
    Registry& r = registry();
    {
        std::shared_lock lock(r.mutex);
        auto it = r.index.find(name);
        if (it != r.index.end()) return Variable(it->second);
    }
    std::unique_lock lock(r.mutex);
    auto it = r.index.find(name);
    if (it != r.index.end()) return Variable(it->second);
    const auto id = static_cast<std::uint32_t>(r.names.size());
    r.names.emplace_back(name);
    r.index.emplace(r.names.back(), id);
    return Variable(id);
}

std::vector<Variable> Variable::sequence(std::string_view stem, unsigned count) {
    std::vector<Variable> vars;
    vars.reserve(count);
    for (unsigned i = 1; i <= count; ++i)
        vars.push_back(named(std::string(stem) + std::to_string(i)));
    return vars;
}

const std::string& Variable::name() const {
    Registry& r = registry();
    std::shared_lock lock(r.mutex);
    return r.names.at(id_);
}

bool Variable::name_less(Variable a, Variable b) {
    return name_less_ids(a.id_, b.id_);
}

bool Variable::name_less_ids(std::uint32_t a, std::uint32_t b) {
    if (a == b) return false;
    Registry& r = registry();
    std::shared_lock lock(r.mutex);
    return r.names.at(a) < r.names.at(b);
}

const std::string& Variable::name_of_id(std::uint32_t id) {
    Registry& r = registry();
    std::shared_lock lock(r.mutex);
    return r.names.at(id);
}

}  // namespace supschur
