//! Deterministic derivative-free maximizers used by the copula fitter:
//! golden-section search for one parameter and a box-clamped Nelder-Mead
//! for two parameters.

const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Maximize a unimodal function on [lo, hi] by golden-section search.
/// Returns (argmax, max).
pub fn golden_max<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    let mut a = lo;
    let mut b = hi;
    let mut x1 = b - GOLDEN * (b - a);
    let mut x2 = a + GOLDEN * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + GOLDEN * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - GOLDEN * (b - a);
            f1 = f(x1);
        }
    }
    let xm = 0.5 * (a + b);
    let fm = f(xm);
    if fm >= f1 && fm >= f2 {
        (xm, fm)
    } else if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

fn clamp2(p: [f64; 2], lo: [f64; 2], hi: [f64; 2]) -> [f64; 2] {
    [p[0].clamp(lo[0], hi[0]), p[1].clamp(lo[1], hi[1])]
}

/// Maximize `f` over the box [lo, hi] with Nelder-Mead started at `x0`.
/// Iterates until the simplex diameter drops below `tol` in every
/// coordinate or `max_iter` evaluations are spent. Returns (argmax, max).
pub fn nelder_mead_max<F: FnMut([f64; 2]) -> f64>(
    mut f: F,
    x0: [f64; 2],
    lo: [f64; 2],
    hi: [f64; 2],
    tol: f64,
    max_iter: usize,
) -> ([f64; 2], f64) {
    // Work on the negated function so the update rules read as the textbook
    // minimizer: reflection 1, expansion 2, contraction 1/2, shrink 1/2.
    let mut eval = |p: [f64; 2]| -f(clamp2(p, lo, hi));

    let step = [
        (0.05 * (hi[0] - lo[0])).max(1e-6),
        (0.05 * (hi[1] - lo[1])).max(1e-6),
    ];
    let mut simplex = [
        x0,
        clamp2([x0[0] + step[0], x0[1]], lo, hi),
        clamp2([x0[0], x0[1] + step[1]], lo, hi),
    ];
    // Degenerate start on a box edge: push inward instead.
    if (simplex[1][0] - simplex[0][0]).abs() < 1e-12 {
        simplex[1][0] = (x0[0] - step[0]).clamp(lo[0], hi[0]);
    }
    if (simplex[2][1] - simplex[0][1]).abs() < 1e-12 {
        simplex[2][1] = (x0[1] - step[1]).clamp(lo[1], hi[1]);
    }
    let mut values = [eval(simplex[0]), eval(simplex[1]), eval(simplex[2])];
    let mut spent = 3;

    while spent < max_iter {
        // Order: values[order[0]] best (smallest), values[order[2]] worst.
        let mut order = [0usize, 1, 2];
        order.sort_by(|&i, &j| values[i].partial_cmp(&values[j]).unwrap());
        let (best, mid, worst) = (order[0], order[1], order[2]);

        let diam0 = simplex
            .iter()
            .map(|p| (p[0] - simplex[best][0]).abs())
            .fold(0.0, f64::max);
        let diam1 = simplex
            .iter()
            .map(|p| (p[1] - simplex[best][1]).abs())
            .fold(0.0, f64::max);
        if diam0 <= tol && diam1 <= tol {
            break;
        }

        let centroid = [
            0.5 * (simplex[best][0] + simplex[mid][0]),
            0.5 * (simplex[best][1] + simplex[mid][1]),
        ];
        let reflect = [
            centroid[0] + (centroid[0] - simplex[worst][0]),
            centroid[1] + (centroid[1] - simplex[worst][1]),
        ];
        let fr = eval(reflect);
        spent += 1;

        if fr < values[best] {
            let expand = [
                centroid[0] + 2.0 * (centroid[0] - simplex[worst][0]),
                centroid[1] + 2.0 * (centroid[1] - simplex[worst][1]),
            ];
            let fe = eval(expand);
            spent += 1;
            if fe < fr {
                simplex[worst] = expand;
                values[worst] = fe;
            } else {
                simplex[worst] = reflect;
                values[worst] = fr;
            }
        } else if fr < values[mid] {
            simplex[worst] = reflect;
            values[worst] = fr;
        } else {
            let contract = [
                centroid[0] + 0.5 * (simplex[worst][0] - centroid[0]),
                centroid[1] + 0.5 * (simplex[worst][1] - centroid[1]),
            ];
            let fc = eval(contract);
            spent += 1;
            if fc < values[worst] {
                simplex[worst] = contract;
                values[worst] = fc;
            } else {
                // Shrink toward the best vertex.
                for i in 0..3 {
                    if i == best {
                        continue;
                    }
                    simplex[i] = [
                        0.5 * (simplex[i][0] + simplex[best][0]),
                        0.5 * (simplex[i][1] + simplex[best][1]),
                    ];
                    values[i] = eval(simplex[i]);
                    spent += 1;
                }
            }
        }
    }

    let mut best = 0;
    for i in 1..3 {
        if values[i] < values[best] {
            best = i;
        }
    }
    let arg = clamp2(simplex[best], lo, hi);
    (arg, -values[best])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn golden_finds_parabola_peak() {
        let (x, v) = golden_max(|x| -(x - 1.3) * (x - 1.3), -4.0, 6.0, 1e-10);
        assert_abs_diff_eq!(x, 1.3, epsilon = 1e-8);
        assert_abs_diff_eq!(v, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn nelder_mead_finds_2d_peak() {
        let f = |p: [f64; 2]| -((p[0] - 0.7).powi(2) + 2.0 * (p[1] + 0.4).powi(2));
        let ([x, y], v) = nelder_mead_max(f, [0.0, 0.0], [-2.0, -2.0], [2.0, 2.0], 1e-10, 500);
        assert_abs_diff_eq!(x, 0.7, epsilon = 1e-6);
        assert_abs_diff_eq!(y, -0.4, epsilon = 1e-6);
        assert!(v > -1e-10);
    }

    #[test]
    fn nelder_mead_respects_box() {
        // Peak outside the box; the argmax should land on the boundary.
        let f = |p: [f64; 2]| -((p[0] - 5.0).powi(2) + (p[1] - 5.0).powi(2));
        let ([x, y], _) = nelder_mead_max(f, [0.5, 0.5], [0.0, 0.0], [1.0, 1.0], 1e-9, 500);
        assert!(x <= 1.0 && y <= 1.0);
        assert_abs_diff_eq!(x, 1.0, epsilon = 1e-6);
        assert_abs_diff_eq!(y, 1.0, epsilon = 1e-6);
    }
}
