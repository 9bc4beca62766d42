#include "singindex/ideal.hpp"

#include "singindex/error.hpp"

namespace singindex::gb {

Ideal::Ideal(std::vector<Polynomial> generators, Locality locality) : locality_(locality) {
  if (generators.empty()) throw RejectedInput("an ideal needs at least one generator");
  ctx_ = generators.front().context();
  for (auto& g : generators) {
    if (!same_context(g.context(), ctx_)) throw RejectedInput("ideal generators live in different contexts");
    if (g.is_zero()) continue;
    bool duplicate = false;
    for (const auto& h : gens_) duplicate = duplicate || h == g;
    if (!duplicate) gens_.push_back(std::move(g));
  }
}

std::size_t Colength::value() const {
  if (infinite_) throw NotIsolated("colength is infinite");
  return value_;
}

std::string Colength::to_string() const { return infinite_ ? "INFINITE" : std::to_string(value_); }

}  // namespace singindex::gb
