//! Product formulas, q-analogues, and the tournament generating function
//! with its expansions over ASM and TSSCPP arrays.
//!
//! Multivariate polynomials here use slot 0 for `λ` and slot `k` for `x_k`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bijections::shuffle::row_shuffles;
use crate::bijections::stats::compute_stats;
use crate::bijections::tournament::tsscpp_tournament_colors;
use crate::color::{asm_set, catalan_dual_sets, classify, ColorSet, TheoremClass};
use crate::error::Error;
use crate::poly::multi::MultiPolynomial;
use crate::staircase::{all_arrays, StaircaseArray, Variant};

use crate::poly::q::QPolynomial;
pub use crate::poly::q::{q_binomial, q_factorial, q_int};

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn choose3(n: usize) -> usize {
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, j| acc * j)
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn exact_ratio(num: BigUint, den: BigUint) -> Result<BigUint, Error> {
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::InexactDivision);
    }
    Ok(q)
}

/// Triples `1 ≤ i ≤ j ≤ k ≤ n − 1`.
fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    let m = n.saturating_sub(1);
    (1..=m).flat_map(move |i| (i..=m).flat_map(move |j| (j..=m).map(move |k| (i, j, k))))
}

/// `C_n(q) = Σ_{k=1}^n q^{k−1} C_{k−1}(q) C_{n−k}(q)`, `C_0 = 1`.
pub fn carlitz_riordan(n: usize) -> QPolynomial {
    let mut c = vec![QPolynomial::one()];
    for m in 1..=n {
        let next = (1..=m).map(|k| (&c[k - 1] * &c[m - k]).shift(k - 1)).sum();
        c.push(next);
    }
    c.swap_remove(n)
}

/// `[2p, p]_q / [p + 1]_q`.
pub fn macmahon_q_catalan(p: usize) -> QPolynomial {
    q_binomial(2 * p, p)
        .div_q_int(p + 1)
        .expect("q-Catalan quotient is a polynomial")
}

/// `A(n, p; q) = ∏_{k=0}^{n−1} (np+k)!_q k!_q / ((kp+k+p)!_q (pk+k)!_q)`.
pub fn sundquist_a(n: usize, p: usize) -> Result<QPolynomial, Error> {
    let mut num = QPolynomial::one();
    let mut den = QPolynomial::one();
    for k in 0..n {
        num = num * q_factorial(n * p + k) * q_factorial(k);
        den = den * q_factorial(k * p + k + p) * q_factorial(p * k + k);
    }
    num.div_exact(&den)
}

/// `∏_{j=0}^{n−1} (3j+1)!_q / (n+j)!_q`.
pub fn asm_q_product(n: usize) -> Result<QPolynomial, Error> {
    let num: QPolynomial = (0..n).map(|j| q_factorial(3 * j + 1)).product();
    let den: QPolynomial = (0..n).map(|j| q_factorial(n + j)).product();
    num.div_exact(&den)
}

/// `∏_{1≤i≤j≤k≤n−1} [i+j+k−1]_q / [i+j+k−2]_q`.
pub fn tspp_q_product(n: usize) -> Result<QPolynomial, Error> {
    let num: QPolynomial = triples(n).map(|(i, j, k)| q_int(i + j + k - 1)).product();
    let den: QPolynomial = triples(n).map(|(i, j, k)| q_int(i + j + k - 2)).product();
    num.div_exact(&den)
}

/// `2^{C(n+1,3)}`.
pub fn boolean_power(n: usize) -> BigUint {
    BigUint::one() << choose3(n + 1)
}

/// `∏_{j=1}^n j!`.
pub fn factorial_product(n: usize) -> BigUint {
    (1..=n).map(factorial).product()
}

/// `∏_{j=1}^n C(n, j)`.
pub fn binomial_product(n: usize) -> BigUint {
    (1..=n).map(|j| binomial(n, j)).product()
}

/// `∏_{j=1}^n C_j`.
pub fn catalan_product(n: usize) -> BigUint {
    (1..=n).map(|j| binomial(2 * j, j) / (j + 1)).product()
}

/// `2^{C(n,2)}`.
pub fn two_power(n: usize) -> BigUint {
    BigUint::one() << choose2(n)
}

/// `∏_{j=0}^{n−1} (3j+1)! / (n+j)!`.
pub fn asm_product(n: usize) -> BigUint {
    let num: BigUint = (0..n).map(|j| factorial(3 * j + 1)).product();
    let den: BigUint = (0..n).map(|j| factorial(n + j)).product();
    exact_ratio(num, den).expect("ASM numbers are integers")
}

/// `∏_{1≤i≤j≤k≤n−1} (i+j+k−1) / (i+j+k−2)`.
pub fn tspp_product(n: usize) -> BigUint {
    let num: BigUint = triples(n)
        .map(|(i, j, k)| BigUint::from(i + j + k - 1))
        .product();
    let den: BigUint = triples(n)
        .map(|(i, j, k)| BigUint::from(i + j + k - 2))
        .product();
    exact_ratio(num, den).expect("TSPP numbers are integers")
}

/// Ideals of `P_n`: `2^{n−1}`.
pub fn pyramid_count(n: usize) -> BigUint {
    BigUint::one() << n.saturating_sub(1)
}

/// `∏_{j=1}^{n−1} (1 + q^j)`.
pub fn pyramid_rank_gf(n: usize) -> QPolynomial {
    (1..n)
        .map(|j| QPolynomial::one() + QPolynomial::monomial(j))
        .product()
}

/// Closed-form number of ideals of `T_n(S)`.
pub fn count_formula(s: ColorSet, n: usize) -> Result<BigUint, Error> {
    Ok(match classify(s)? {
        TheoremClass::Empty => boolean_power(n),
        TheoremClass::Single => factorial_product(n),
        TheoremClass::TwoOpposite => binomial_product(n),
        TheoremClass::TwoAdjacent => catalan_product(n),
        TheoremClass::ThreeNice => two_power(n),
        TheoremClass::Four => asm_product(n),
        TheoremClass::Six => tspp_product(n),
        TheoremClass::ThreeExceptional | TheoremClass::FiveA | TheoremClass::FiveB => {
            return Err(Error::NoFormula(s))
        }
    })
}

/// Whether [`rank_gf_formula`] describes the dual poset `T_n*(S)` rather
/// than `T_n(S)`.
pub fn formula_is_dual(s: ColorSet) -> bool {
    catalan_dual_sets().contains(&s)
}

/// Closed-form rank generating function of `J(T_n(S))`, or of
/// `J(T_n*(S))` when [`formula_is_dual`] holds.
pub fn rank_gf_formula(s: ColorSet, n: usize) -> Result<QPolynomial, Error> {
    Ok(match classify(s)? {
        TheoremClass::Empty => {
            (QPolynomial::one() + QPolynomial::monomial(1)).pow(choose3(n + 1) as u32)
        }
        TheoremClass::Single => (1..=n).map(q_factorial).product(),
        TheoremClass::TwoOpposite => (1..=n).map(|j| q_binomial(n, j)).product(),
        TheoremClass::TwoAdjacent => (1..=n).map(carlitz_riordan).product(),
        TheoremClass::ThreeNice => (1..n)
            .map(|j| (QPolynomial::one() + QPolynomial::monomial(j)).pow((n - j) as u32))
            .product(),
        _ => return Err(Error::NoFormula(s)),
    })
}

fn lambda_x(n: usize, lambda: u32, x: impl IntoIterator<Item = (usize, u32)>) -> MultiPolynomial {
    let mut e = vec![0u32; n + 1];
    e[0] = lambda;
    for (k, p) in x {
        e[k] += p;
    }
    MultiPolynomial::monomial(e, BigInt::one())
}

/// `∏_{1≤i<j≤n} (x_i + λ x_j)`.
pub fn tournament_gf(n: usize) -> MultiPolynomial {
    let mut out = MultiPolynomial::one(n + 1);
    for i in 1..=n {
        for j in i + 1..=n {
            let factor = &lambda_x(n, 0, [(i, 1)]) + &lambda_x(n, 1, [(j, 1)]);
            out = &out * &factor;
        }
    }
    out
}

/// `Σ λ^{E} (1+λ)^{N} ∏ x_k^{C_k − 1}` over the ASM arrays.
pub fn asm_expansion(n: usize) -> MultiPolynomial {
    let one_plus = &MultiPolynomial::one(n + 1) + &MultiPolynomial::var(n + 1, 0);
    let mut out = MultiPolynomial::zero(n + 1);
    for a in all_arrays(n, asm_set(), Variant::Yplus) {
        let st = compute_stats(&a);
        let mono = lambda_x(
            n,
            st.e as u32,
            st.c.iter().enumerate().map(|(k, &c)| (k + 1, c as u32 - 1)),
        );
        out += &(&mono * &one_plus.pow(st.n_special as u32));
    }
    out
}

/// `Σ_A 2^{N(A)}` over the ASM arrays.
pub fn asm_two_enumeration(n: usize) -> BigUint {
    all_arrays(n, asm_set(), Variant::Yplus)
        .iter()
        .map(|a| BigUint::one() << compute_stats(a).n_special)
        .sum()
}

/// The contribution of one array of `Y_n⁺({b,r,(g),y})`:
/// `λ^{E} ∏ x_i^{n−i−E_i} Σ_{row shuffles α′} ∏_d x_d^{E^d(α′)}`.
pub fn tsscpp_array_term(a: &StaircaseArray) -> Result<MultiPolynomial, Error> {
    let n = a.n();
    let st = compute_stats(a);
    let base = lambda_x(
        n,
        st.e as u32,
        (1..n).map(|i| (i, (n - i - st.e_row[i - 1]) as u32)),
    );
    let mut inner = MultiPolynomial::zero(n + 1);
    for s in row_shuffles(a)? {
        let sst = compute_stats(&s);
        inner += &lambda_x(
            n,
            0,
            sst.e_diag
                .iter()
                .enumerate()
                .map(|(d, &e)| (d + 1, e as u32)),
        );
    }
    Ok(&base * &inner)
}

/// Sum of [`tsscpp_array_term`] over the TSSCPP tournament arrays.
pub fn tsscpp_expansion(n: usize) -> MultiPolynomial {
    let mut out = MultiPolynomial::zero(n + 1);
    for a in all_arrays(n, tsscpp_tournament_colors(), Variant::Yplus) {
        out += &tsscpp_array_term(&a).expect("enumerated arrays validate");
    }
    out
}

/// `Σ λ^{E} ∏ C(C_{i+1,k}, E_{i,k})` over the TSSCPP tournament arrays, as
/// a polynomial in `λ`.
pub fn tsscpp_binomial_sum(n: usize) -> QPolynomial {
    all_arrays(n, tsscpp_tournament_colors(), Variant::Yplus)
        .iter()
        .map(|a| {
            let st = compute_stats(a);
            let weight: BigUint = st
                .e_row_value
                .iter()
                .map(|(&(i, k), &e)| binomial(st.c_at(i + 1, k), e))
                .product();
            let mut coeffs = vec![BigInt::zero(); st.e + 1];
            coeffs[st.e] = weight.into();
            QPolynomial::from_coeffs(coeffs)
        })
        .sum()
}
