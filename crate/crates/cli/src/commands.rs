use crate::table::{Sampling, Table};
use crate::Failure;
use darboux_osc::pha_piv::{closed_form_g, piv_residual_point, singular_points, PivSolution, SingularKind};
use darboux_osc::seeds::Parity;
use darboux_osc::susy::{build_partner, lowest_states, validate_epsilon_range, RangeCheck, TransformCase};
use serde::Serialize;
use serde_json::Value;

/// Eigenfunction columns: the three lowest kept levels plus any created below them.
const KEPT_STATES: usize = 3;
/// g and its residual are blanked this close to a pole; the residual also near zeros of g.
pub const POLE_MASK: f64 = 1e-3;
const SCAN_POINTS: usize = 4001;

pub fn potential(case: TransformCase, eps1: f64, eps2: Option<f64>, sampling: Sampling) -> Result<Table, Failure> {
    if let RangeCheck::Rejected(why) = validate_epsilon_range(case, eps1, eps2)? {
        return Err(Failure::Rejected(why));
    }
    let partner = build_partner(case, eps1, eps2)?;
    let states = lowest_states(case, eps1, eps2, KEPT_STATES)?;
    let mut columns = vec!["x".to_owned(), "V".to_owned()];
    columns.extend((0..states.len()).map(|k| format!("phi{k}")));
    let rows = sampling
        .points()
        .map(|x| {
            let mut row = vec![x, partner.eval(x)];
            row.extend(states.iter().map(|s| s.value(x)));
            row
        })
        .collect();
    let energies: Vec<f64> = states.iter().map(|s| s.energy).collect();
    Ok(Table {
        case: case.name().to_owned(),
        eps1,
        eps2: case.parities().1.and(eps2),
        sampling,
        notes: vec![("energies", energies.into())],
        columns,
        rows,
    })
}

/// Parameters written next to a PIV table.
#[derive(Debug, Serialize)]
pub struct PivMeta {
    pub order: u8,
    pub parity: &'static str,
    pub a: f64,
    pub b: f64,
    pub epsilon: f64,
    pub permutation: u8,
    pub max_residual: f64,
    pub trivial: bool,
}

pub fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Odd => "odd",
        Parity::Even => "even",
    }
}

fn near(points: &[f64], x: f64) -> bool {
    points.iter().any(|p| (p - x).abs() < POLE_MASK)
}

pub fn piv(order: u8, parity: Parity, index: u8, epsilon: f64, sampling: Sampling) -> Result<(Table, PivMeta), Failure> {
    let sol = closed_form_g(order, parity, index, epsilon)?;
    let (poles, zeros) = singularities(&sol, sampling);
    let mut max_residual = 0.0_f64;
    let rows = sampling
        .points()
        .map(|x| {
            let g = if near(&poles, x) { f64::NAN } else { sol.g(x) };
            let residual = if sol.trivial {
                0.0
            } else if !g.is_finite() || near(&zeros, x) {
                f64::NAN
            } else {
                piv_residual_point(&sol, x).map_or(f64::NAN, |p| p.relative())
            };
            if residual.is_finite() {
                max_residual = max_residual.max(residual);
            }
            vec![x, g, residual]
        })
        .collect();
    let meta = PivMeta {
        order,
        parity: parity_name(parity),
        a: sol.a,
        b: sol.b,
        epsilon,
        permutation: index,
        max_residual,
        trivial: sol.trivial,
    };
    let table = Table {
        case: format!("piv{order}-{}-g{index}", meta.parity),
        eps1: epsilon,
        eps2: None,
        sampling,
        notes: vec![("a", sol.a.into()), ("b", sol.b.into())],
        columns: vec!["x".into(), "g".into(), "residual".into()],
        rows,
    };
    Ok((table, meta))
}

/// Poles of g, and every sign change of g (poles and zeros).
fn singularities(sol: &PivSolution, sampling: Sampling) -> (Vec<f64>, Vec<f64>) {
    // The scan starts just off the origin, where 1/x-type terms live.
    let lo = 0.5 * (sampling.l / sampling.n as f64).min(1e-2);
    let found = singular_points(|x| sol.g(x), lo, sampling.l, SCAN_POINTS.max(4 * sampling.n));
    let poles = found.iter().filter(|p| p.kind == SingularKind::Pole).map(|p| p.x).collect();
    (poles, found.iter().map(|p| p.x).collect())
}

pub fn meta_json(meta: &PivMeta) -> Value {
    serde_json::to_value(meta).expect("plain struct")
}
