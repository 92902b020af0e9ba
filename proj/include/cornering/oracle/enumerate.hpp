#pragma once

#include <functional>
#include <vector>

#include "cornering/lenses.hpp"
#include "cornering/oracle/sliding.hpp"

namespace cornering::oracle {

/// Every comb over `pattern` whose residuals are drawn from `words`, in
/// family order.
inline void enumerate_combs(const AlternationPattern<fin::FinObject>& pattern, const std::vector<fin::FinObject>& words,
                            const std::function<void(const Comb<FinBase>&)>& visit) {
  const CombFamily family(pattern.pairs, words);
  for (std::size_t i = 0; i < family.size(); ++i) visit(family.graph().cook(family.decode(i)));
}

inline std::vector<Comb<FinBase>> enumerate_combs(const AlternationPattern<fin::FinObject>& pattern,
                                                  const std::vector<fin::FinObject>& words) {
  std::vector<Comb<FinBase>> out;
  enumerate_combs(pattern, words, [&out](const Comb<FinBase>& c) { out.push_back(c); });
  return out;
}

/// Every optic (A, B) -> (C, D) with residual drawn from `residuals`.
inline void enumerate_optics(const fin::FinObject& a, const fin::FinObject& b, const fin::FinObject& c,
                             const fin::FinObject& d, const std::vector<fin::FinObject>& residuals,
                             const std::function<void(const Optic<FinBase>&)>& visit) {
  for (const auto& m : residuals)
    for (const auto& alpha : fin::enumerate_homs(a, m * c))
      for (const auto& beta : fin::enumerate_homs(m * d, b)) visit(Optic<FinBase>(m, alpha, beta));
}

inline std::vector<Optic<FinBase>> enumerate_optics(const fin::FinObject& a, const fin::FinObject& b,
                                                    const fin::FinObject& c, const fin::FinObject& d,
                                                    const std::vector<fin::FinObject>& residuals) {
  std::vector<Optic<FinBase>> out;
  enumerate_optics(a, b, c, d, residuals, [&out](const Optic<FinBase>& h) { out.push_back(h); });
  return out;
}

inline std::vector<Lens> enumerate_lenses(const fin::FinObject& a, const fin::FinObject& b) {
  std::vector<Lens> out;
  for (const auto& get : fin::enumerate_homs(a, b))
    for (const auto& put : fin::enumerate_homs(a * b, a)) out.emplace_back(get, put);
  return out;
}

}  // namespace cornering::oracle
