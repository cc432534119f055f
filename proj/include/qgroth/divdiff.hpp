#pragma once

// Divided differences and their isobaric deformations acting on one
// alphabet (x or y) of a polynomial.

#include <map>

#include "qgroth/polyring.hpp"
#include "qgroth/symgroup.hpp"

namespace qgroth {

enum class OpKind { Del, PiPlus, PiMinus };

/// Exchanges v_i and v_{i+1} in the given alphabet.
MultiPoly swap_vars(const MultiPoly& f, int i, VarKind alphabet = VarKind::X);

/// (f - s_i f) / (v_i - v_{i+1}).
MultiPoly del(int i, const MultiPoly& f, VarKind alphabet = VarKind::X);
/// del(f) + sign * beta * del(v_{i+1} f), sign = +1 or -1.
MultiPoly pi(int i, int sign, const MultiPoly& f, VarKind alphabet = VarKind::X);

MultiPoly apply_op(OpKind kind, int i, const MultiPoly& f, VarKind alphabet);

/// op_{a_1}(op_{a_2}(...op_{a_p}(f))); the last letter acts first.
MultiPoly apply_word(OpKind kind, const Word& word, const MultiPoly& f,
                     VarKind alphabet = VarKind::X);

/// The operator indexed by w via one of its reduced words.
MultiPoly apply_perm(OpKind kind, const Permutation& w, const MultiPoly& f,
                     VarKind alphabet = VarKind::X);

/// op_v(f) for every v in S_n, built by extending reduced words on the left.
std::map<Permutation, MultiPoly> operator_orbit(OpKind kind, int n,
                                                const MultiPoly& f,
                                                VarKind alphabet = VarKind::X);

/// Sum over v <= w of (sign * beta)^{l(w)-l(v)} * orbit[v], where the orbit
/// comes from operator_orbit.
MultiPoly bruhat_sum(const Permutation& w,
                     const std::map<Permutation, MultiPoly>& orbit, int sign);

/// psi_w f = sum_{v <= w} beta^{l(w)-l(v)} pi_v f.
MultiPoly apply_psi(const Permutation& w, const MultiPoly& f,
                    VarKind alphabet = VarKind::X);

}  // namespace qgroth
