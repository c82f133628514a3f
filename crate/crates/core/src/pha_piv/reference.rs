//! Special-ε members of the hypergeometric hierarchy, written out as elementary,
//! error-function and Dawson-function expressions.
//!
//! [`TABLE`] holds the correct closed forms. [`MISPRINTS`] keeps a set of commonly
//! quoted variants that do not solve PIV, so tests can show that they fail.

use crate::seeds::Parity;
use crate::specfun::{dawson, erf, erfi};

#[derive(Clone, Copy, Debug)]
pub enum Cell {
    Closed(fn(f64) -> f64),
    /// The state vanishes identically, so g is 0/0.
    Undetermined,
}

#[derive(Clone, Copy, Debug)]
pub struct TableEntry {
    pub order: u8,
    pub parity: Parity,
    pub index: u8,
    pub epsilon: f64,
    pub expr: &'static str,
    pub cell: Cell,
}

impl TableEntry {
    pub fn name(&self) -> String {
        let p = match self.parity {
            Parity::Odd => "odd",
            Parity::Even => "even",
        };
        format!("order{} {p} eps={} g{}", self.order, self.epsilon, self.index)
    }

    pub fn eval(&self, x: f64) -> Option<f64> {
        match self.cell {
            Cell::Closed(f) => Some(f(x)),
            Cell::Undetermined => None,
        }
    }
}

const fn entry(order: u8, parity: Parity, index: u8, epsilon: f64, expr: &'static str, f: fn(f64) -> f64) -> TableEntry {
    TableEntry { order, parity, index, epsilon, expr, cell: Cell::Closed(f) }
}

const fn undetermined(order: u8, parity: Parity, index: u8, epsilon: f64) -> TableEntry {
    TableEntry { order, parity, index, epsilon, expr: "undetermined", cell: Cell::Undetermined }
}

fn sqrt_pi() -> f64 {
    std::f64::consts::PI.sqrt()
}

fn erfi_or_nan(x: f64) -> f64 {
    erfi(x).unwrap_or(f64::NAN)
}

use Parity::{Even, Odd};

pub static TABLE: [TableEntry; 36] = [
    // first order, odd seed
    entry(1, Odd, 1, -0.5, "2 exp(-x^2)/(sqrt(pi) erf(x))", |x| 2.0 * (-x * x).exp() / (sqrt_pi() * erf(x))),
    entry(1, Odd, 2, -0.5, "2 exp(-x^2)/(sqrt(pi) erf(x)) + 1/(sqrt(pi) exp(x^2) x^2 erf(x) + x) - 1/x", |x| {
        2.0 * (-x * x).exp() / (sqrt_pi() * erf(x)) + 1.0 / (sqrt_pi() * (x * x).exp() * x * x * erf(x) + x) - 1.0 / x
    }),
    entry(1, Odd, 3, -0.5, "2 exp(-x^2)/(sqrt(pi) erf(x)) + 1/(sqrt(pi) exp(x^2) x^2 erf(x) + x) - 1/x", |x| {
        2.0 * (-x * x).exp() / (sqrt_pi() * erf(x)) + 1.0 / (sqrt_pi() * (x * x).exp() * x * x * erf(x) + x) - 1.0 / x
    }),
    entry(1, Odd, 1, 0.5, "2 exp(x^2)/(sqrt(pi) erfi(x)) - 2x", |x| {
        2.0 * (x * x).exp() / (sqrt_pi() * erfi_or_nan(x)) - 2.0 * x
    }),
    entry(1, Odd, 2, 0.5, "(1 - 2xF)^2/(2F^2 (F - x) + F)", |x| {
        let f = dawson(x);
        (1.0 - 2.0 * x * f).powi(2) / (2.0 * f * f * (f - x) + f)
    }),
    entry(1, Odd, 3, 0.5, "1/F - 2x", |x| 1.0 / dawson(x) - 2.0 * x),
    entry(1, Odd, 1, 1.5, "1/x - 2x", |x| 1.0 / x - 2.0 * x),
    entry(1, Odd, 2, 1.5, "(1 - 2x^2)/(2x^3 + x)", |x| (1.0 - 2.0 * x * x) / (2.0 * x * x * x + x)),
    entry(1, Odd, 3, 1.5, "1/x", |x| 1.0 / x),
    // first order, even seed
    entry(1, Even, 1, -0.5, "0", |_| 0.0),
    undetermined(1, Even, 2, -0.5),
    entry(1, Even, 3, -0.5, "-1/x", |x| -1.0 / x),
    entry(1, Even, 1, 0.5, "-2x", |x| -2.0 * x),
    entry(1, Even, 2, 0.5, "0", |_| 0.0),
    undetermined(1, Even, 3, 0.5),
    entry(1, Even, 1, 1.5, "2((1 - 2x^2)F + x)/(2xF - 1)", |x| {
        let f = dawson(x);
        2.0 * ((1.0 - 2.0 * x * x) * f + x) / (2.0 * x * f - 1.0)
    }),
    entry(1, Even, 2, 1.5, "((2x^2 - 1)F - x)(2(x - F)F - 1)/((2xF - 1)(F(2x^2 F + F - 3x) + 1))", |x| {
        let f = dawson(x);
        ((2.0 * x * x - 1.0) * f - x) * (2.0 * (x - f) * f - 1.0)
            / ((2.0 * x * f - 1.0) * (f * (2.0 * x * x * f + f - 3.0 * x) + 1.0))
    }),
    entry(1, Even, 3, 1.5, "2F/(2xF - 1) - 1/F", |x| {
        let f = dawson(x);
        2.0 * f / (2.0 * x * f - 1.0) - 1.0 / f
    }),
    // second order, odd seed
    entry(2, Odd, 1, -1.5, "(1 + 2x^2)/(2x^3 - x)", |x| (1.0 + 2.0 * x * x) / (2.0 * x * x * x - x)),
    entry(2, Odd, 2, -1.5, "-2x(2x^2 - 3)/(2x^2 - 1)", |x| -2.0 * x * (2.0 * x * x - 3.0) / (2.0 * x * x - 1.0)),
    entry(2, Odd, 3, -1.5, "4x(3 + 4x^2 - 4x^4)/((2x^2 - 1)(3 + 4x^4))", |x| {
        let x2 = x * x;
        4.0 * x * (3.0 + 4.0 * x2 - 4.0 * x2 * x2) / ((2.0 * x2 - 1.0) * (3.0 + 4.0 * x2 * x2))
    }),
    entry(2, Odd, 1, 1.5, "-1/x - 2x", |x| -1.0 / x - 2.0 * x),
    entry(2, Odd, 2, 1.5, "0", |_| 0.0),
    undetermined(2, Odd, 3, 1.5),
    entry(2, Odd, 1, 3.5, "(9 - 48x^4 + 32x^6 - 16x^8)/(x(2x^2 - 3)(3 + 4x^4))", |x| {
        let x2 = x * x;
        let x4 = x2 * x2;
        (9.0 - 48.0 * x4 + 32.0 * x4 * x2 - 16.0 * x4 * x4) / (x * (2.0 * x2 - 3.0) * (3.0 + 4.0 * x4))
    }),
    entry(2, Odd, 2, 3.5, "-4x(2x^2 + 3)(8x^6 - 12x^4 + 18x^2 + 9)/((4x^4 + 3)(8x^6 + 12x^4 + 18x^2 - 9))", |x| {
        let x2 = x * x;
        let x4 = x2 * x2;
        let x6 = x4 * x2;
        -4.0 * x * (2.0 * x2 + 3.0) * (8.0 * x6 - 12.0 * x4 + 18.0 * x2 + 9.0)
            / ((4.0 * x4 + 3.0) * (8.0 * x6 + 12.0 * x4 + 18.0 * x2 - 9.0))
    }),
    entry(2, Odd, 3, 3.5, "4x(4x^4 + 4x^2 - 3)/((1 + 2x^2)(3 + 4x^4))", |x| {
        let x2 = x * x;
        4.0 * x * (-3.0 + 4.0 * x2 + 4.0 * x2 * x2) / ((1.0 + 2.0 * x2) * (3.0 + 4.0 * x2 * x2))
    }),
    // second order, even seed
    entry(2, Even, 1, -2.5, "4x(4x^4 + 4x^2 - 3)/((1 + 2x^2)(3 + 4x^4))", |x| {
        let x2 = x * x;
        4.0 * x * (-3.0 + 4.0 * x2 + 4.0 * x2 * x2) / ((1.0 + 2.0 * x2) * (3.0 + 4.0 * x2 * x2))
    }),
    entry(2, Even, 2, -2.5, "-(2x^2 - 1)(8x^6 - 12x^4 + 18x^2 + 9)/(x(2x^2 - 3)(4x^4 + 3))", |x| {
        let x2 = x * x;
        let x4 = x2 * x2;
        -(2.0 * x2 - 1.0) * (8.0 * x4 * x2 - 12.0 * x4 + 18.0 * x2 + 9.0) / (x * (2.0 * x2 - 3.0) * (4.0 * x4 + 3.0))
    }),
    entry(2, Even, 3, -2.5, "-4x(27 + 72x^2 + 16x^8)/((3 + 4x^4)(8x^6 + 12x^4 + 18x^2 - 9))", |x| {
        let x2 = x * x;
        let x4 = x2 * x2;
        -4.0 * x * (27.0 + 72.0 * x2 + 16.0 * x4 * x4)
            / ((3.0 + 4.0 * x4) * (-9.0 + 18.0 * x2 + 12.0 * x4 + 8.0 * x4 * x2))
    }),
    entry(2, Even, 1, -0.5, "0", |_| 0.0),
    undetermined(2, Even, 2, -0.5),
    entry(2, Even, 3, -0.5, "4x/(1 - 2x^2)", |x| 4.0 * x / (1.0 - 2.0 * x * x)),
    entry(2, Even, 1, 2.5, "(6x + 8x^5)/(1 - 4x^4)", |x| {
        let x4 = x.powi(4);
        (6.0 * x + 8.0 * x4 * x) / (1.0 - 4.0 * x4)
    }),
    entry(2, Even, 2, 2.5, "-(4x^4 + 3)/(x(2x^2 + 1)(2x^2 + 3))", |x| {
        let x2 = x * x;
        -(4.0 * x2 * x2 + 3.0) / (x * (2.0 * x2 + 1.0) * (2.0 * x2 + 3.0))
    }),
    entry(2, Even, 3, 2.5, "4x/(1 + 2x^2)", |x| 4.0 * x / (1.0 + 2.0 * x * x)),
];

/// Widely circulated forms of some of the cells above that fail the PIV equation
/// for the parameters of their family.
pub static MISPRINTS: [TableEntry; 8] = [
    entry(1, Odd, 1, 0.5, "2 exp(-x^2)/(sqrt(pi) erfi(x)) - 2x", |x| {
        2.0 * (-x * x).exp() / (sqrt_pi() * erfi_or_nan(x)) - 2.0 * x
    }),
    entry(1, Even, 1, 1.5, "2((1 - 2x^2)F + x)/(2x^2 F - 1)", |x| {
        let f = dawson(x);
        2.0 * ((1.0 - 2.0 * x * x) * f + x) / (2.0 * x * x * f - 1.0)
    }),
    entry(2, Odd, 2, -1.5, "(26x + 60x^3 - 50x^5 - 56x^7 - 8x^9)/(-1 - 8x^2 + 9x^4 + 20x^6 + 4x^8)", |x| {
        let x2 = x * x;
        let num = x * (26.0 + x2 * (60.0 + x2 * (-50.0 + x2 * (-56.0 - 8.0 * x2))));
        let den = -1.0 + x2 * (-8.0 + x2 * (9.0 + x2 * (20.0 + 4.0 * x2)));
        num / den
    }),
    entry(2, Odd, 2, 1.5, "-4x(2 + x^2)/(-5 + 4x^2 + x^4)", |x| {
        let x2 = x * x;
        -4.0 * x * (2.0 + x2) / (-5.0 + 4.0 * x2 + x2 * x2)
    }),
    entry(2, Odd, 2, 3.5, "4x(243 + 855x^2 - ... - 48x^12)/((3 + 4x^4)(81 - 162x^2 - ... + 8x^10))", |x| {
        let x2 = x * x;
        let num = 4.0
            * x
            * (243.0 + x2 * (855.0 + x2 * (-459.0 + x2 * (168.0 + x2 * (-120.0 + x2 * (112.0 - 48.0 * x2))))));
        let den = (3.0 + 4.0 * x2 * x2) * (81.0 + x2 * (-162.0 + x2 * (-177.0 + x2 * (30.0 + x2 * (-28.0 + 8.0 * x2)))));
        num / den
    }),
    entry(2, Even, 2, -2.5, "(-45 + 1071x^2 + ... + 64x^14)/(-x(3 + 4x^4)(-15 + 129x^2 + 194x^4 + 76x^6 + 8x^8))", |x| {
        let x2 = x * x;
        let num = -45.0
            + x2 * (1071.0 + x2 * (3864.0 + x2 * (2124.0 + x2 * (2480.0 + x2 * (2512.0 + x2 * (768.0 + 64.0 * x2))))));
        let den = -x * (3.0 + 4.0 * x2 * x2) * (-15.0 + x2 * (129.0 + x2 * (194.0 + x2 * (76.0 + 8.0 * x2))));
        num / den
    }),
    entry(2, Even, 2, -0.5, "(3 + 9x^2 + 2x^4)/(-3x - x^3)", |x| {
        let x2 = x * x;
        (3.0 + 9.0 * x2 + 2.0 * x2 * x2) / (-3.0 * x - x * x2)
    }),
    entry(2, Even, 2, 2.5, "(45 - 39x^2 + 14x^4 - 52x^6 - 40x^8)/(-(45x + 107x^3 + 30x^5 - 12x^7 - 8x^9))", |x| {
        let x2 = x * x;
        let num = 45.0 + x2 * (-39.0 + x2 * (14.0 + x2 * (-52.0 - 40.0 * x2)));
        let den = -x * (45.0 + x2 * (107.0 + x2 * (30.0 + x2 * (-12.0 - 8.0 * x2))));
        num / den
    }),
];

/// The determined cells of [`TABLE`].
pub fn determined() -> impl Iterator<Item = &'static TableEntry> {
    TABLE.iter().filter(|e| matches!(e.cell, Cell::Closed(_)))
}
