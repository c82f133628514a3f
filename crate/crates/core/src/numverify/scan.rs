/// First sign change (or exact zero) of `f` on [a, b], sampled at `n` points and refined
/// by bisection. NaN samples count as a singular point.
pub fn first_sign_change<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> Option<f64> {
    let step = (b - a) / (n - 1) as f64;
    let mut prev_x = a;
    let mut prev = f(a);
    if prev.is_nan() {
        return Some(a);
    }
    for i in 1..n {
        let x = if i == n - 1 { b } else { a + step * i as f64 };
        let v = f(x);
        if v.is_nan() {
            return Some(x);
        }
        if v == 0.0 {
            return Some(x);
        }
        if prev != 0.0 && v.signum() != prev.signum() {
            let (mut lo, mut hi, mut flo) = (prev_x, x, prev);
            for _ in 0..100 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let fm = f(mid);
                if fm == 0.0 {
                    return Some(mid);
                }
                if fm.signum() == flo.signum() {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            return Some(0.5 * (lo + hi));
        }
        prev_x = x;
        prev = v;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_finds_root() {
        let r = first_sign_change(|x| x - 2.345, 0.0, 12.0, 4001).unwrap();
        assert!((r - 2.345).abs() < 1e-12);
        assert!(first_sign_change(|x| 1.0 + x * x, 0.0, 12.0, 4001).is_none());
    }
}
