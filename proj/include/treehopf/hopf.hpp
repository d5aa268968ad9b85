#pragma once

#include "treehopf/algebra.hpp"
#include "treehopf/subforest.hpp"

#include <functional>
#include <span>

namespace treehopf {

/// Colour count and parameter values selecting one member of the coproduct family.
struct HopfContext {
  explicit HopfContext(QSpec q_spec) : n(q_spec.colours()), q(std::move(q_spec)) {}

  int n;
  QSpec q;
};

/// Coproduct on a single basis forest; used to plug alternative (e.g.
/// deliberately broken) coproducts into the generic machinery.
using CoproductFn = std::function<TensorElement(const Forest&)>;

/// q(s, host) = prod_j prod_{v in s} q1j^{p_j(v,s,host)} prod_{v in s^c} q2j^{p_j(v,s^c,host)}.
Poly q_coeff(const Subforest& s, const HopfContext& ctx);
Poly q_coeff(const Shape& host, VertexMask s, const QSpec& q);

/// Closed formula: sum over all vertex subsets s of q(s,t) s (x) s^c.
TensorElement coproduct(const Element& a, const HopfContext& ctx);
TensorElement coproduct(const Forest& f, const HopfContext& ctx);

/// Structural recursion through lambda and the sigma maps.
TensorElement coproduct_inductive(const Element& a, const HopfContext& ctx);

/// (sigma_1, sigma_2) applied to Delta(f_1) (x) ... (x) Delta(f_n): the image of
/// Delta(lambda(f_1..f_n)) prescribed by the n-algebra morphism condition.
TensorElement lambda_sigma(const HopfContext& ctx, std::span<const TensorElement> deltas);

/// S(x) = sum_k (-1)^{k+1} mu^{(k)} reduced-Delta^{(k)}(x), with S(1) = 1.
Element antipode_recursive(const Element& a, const HopfContext& ctx);
Element antipode_recursive(const Element& a, const CoproductFn& delta);

/// Sum over ordered partitions t = s_1 u ... u s_k of
/// (-1)^k s_1...s_k prod_{j<k} q(s_j, s_j u ... u s_k), each host being the
/// subforest induced on the union.
Element antipode_partitions(const Element& a, const HopfContext& ctx);

/// Connes-Kreimer coproduct by admissible cuts, written independently of the
/// subforest machinery. Only for n = 1.
TensorElement ck_coproduct_oracle(const Element& a);

/// Face map d_i: C_n -> C_{n-1}, 0 <= i <= n.
Element simplicial_d(int i, const Element& a);
/// Degeneracy s_i: C_n -> C_{n+1}, 0 <= i <= n.
Element simplicial_s(int i, const Element& a);

Forest simplicial_d(int i, int n, const Forest& f);
Forest simplicial_s(int i, int n, const Forest& f);

} // namespace treehopf
