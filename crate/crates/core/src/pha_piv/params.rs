//! PIV parameters (a, b) from the three extremal eigenvalues. Generic over the
//! scalar so the bookkeeping can be checked exactly on rationals.

use num_traits::Num;

use crate::error::{Error, Result};

fn half<T: Num>() -> T {
    T::one() / (T::one() + T::one())
}

fn int<T: Num>(n: i32) -> T {
    let mut acc = T::zero();
    for _ in 0..n.unsigned_abs() {
        acc = acc + T::one();
    }
    if n < 0 {
        T::zero() - acc
    } else {
        acc
    }
}

pub(crate) fn check_order(order: u8) -> Result<()> {
    match order {
        1 | 2 => Ok(()),
        _ => Err(Error::Domain(format!("order must be 1 or 2, got {order}"))),
    }
}

pub(crate) fn check_index(index: u8) -> Result<()> {
    match index {
        1..=3 => Ok(()),
        _ => Err(Error::Domain(format!("permutation index must be 1, 2 or 3, got {index}"))),
    }
}

/// Eigenvalues of the three extremal states in their base labeling:
/// (ε, ε+1, ½) for order 1 and (ε−1, ε+1, ½) for order 2.
pub fn eigen_triple<T: Num + Clone>(order: u8, epsilon: T) -> Result<[T; 3]> {
    check_order(order)?;
    let first = if order == 1 { epsilon.clone() } else { epsilon.clone() - T::one() };
    Ok([first, epsilon + T::one(), half()])
}

/// Cyclic relabeling that puts state `index` in the first slot.
pub fn permuted<T: Clone>(triple: &[T; 3], index: u8) -> Result<[T; 3]> {
    check_index(index)?;
    let k = (index - 1) as usize;
    Ok([triple[k].clone(), triple[(k + 1) % 3].clone(), triple[(k + 2) % 3].clone()])
}

/// a = ε₂ + ε₃ − 2ε₁ − 1, b = −2(ε₂ − ε₃)².
pub fn piv_parameters<T: Num + Clone>(t: &[T; 3]) -> (T, T) {
    let two = int::<T>(2);
    let a = t[1].clone() + t[2].clone() - two.clone() * t[0].clone() - T::one();
    let d = t[1].clone() - t[2].clone();
    (a, T::zero() - two * d.clone() * d)
}

/// The per-family closed expressions for (a, b), written out independently of the triple.
pub fn closed_parameters<T: Num + Clone>(order: u8, index: u8, epsilon: T) -> Result<(T, T)> {
    check_order(order)?;
    check_index(index)?;
    let e = epsilon;
    let h = half::<T>();
    let sq = |v: T| v.clone() * v;
    let m2 = int::<T>(-2);
    Ok(match (order, index) {
        (1, 1) => (h.clone() - e.clone(), m2 * sq(e + h)),
        (1, 2) => (T::zero() - e.clone() - int::<T>(5) * h.clone(), m2 * sq(e - h)),
        (1, 3) => (int::<T>(2) * e - T::one(), m2),
        (2, 1) => (int::<T>(5) * h.clone() - e.clone(), m2 * sq(e + h)),
        (2, 2) => (T::zero() - e.clone() - int::<T>(7) * h.clone(), m2 * sq(e - int::<T>(3) * h)),
        (2, 3) => (int::<T>(2) * (e - T::one()), int(-8)),
        _ => unreachable!(),
    })
}

/// (a, b) for the state `index` used as the first extremal state.
pub fn parameters_for<T: Num + Clone>(order: u8, index: u8, epsilon: T) -> Result<(T, T)> {
    Ok(piv_parameters(&permuted(&eigen_triple(order, epsilon)?, index)?))
}
