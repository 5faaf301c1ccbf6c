//! Minimal linear-programming helper: minimize `a + b + c` subject to
//! `row.0*a + row.1*b + row.2*c >= row.3` and `a, b, c >= 0`.
//!
//! Constraint counts here are tiny (one row per ordered point pair), so
//! the optimum is found by enumerating candidate vertices: intersections
//! of three active constraints drawn from the rows and the three
//! nonnegativity planes. A pointed nonempty polyhedron has a vertex, and
//! a bounded-below linear objective attains its minimum at one, so an
//! empty candidate set means the program is infeasible.

use crate::metric::TOLERANCE;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constraint {
    pub coeffs: [f64; 3],
    pub rhs: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Lp3Outcome {
    Optimal { point: [f64; 3], objective: f64 },
    Infeasible,
}

fn solve3(rows: [[f64; 4]; 3]) -> Option<[f64; 3]> {
    let a = rows;
    let det = |m: [[f64; 3]; 3]| -> f64 {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let base = [
        [a[0][0], a[0][1], a[0][2]],
        [a[1][0], a[1][1], a[1][2]],
        [a[2][0], a[2][1], a[2][2]],
    ];
    let d = det(base);
    if d.abs() < 1e-12 {
        return None;
    }
    let mut out = [0.0; 3];
    for col in 0..3 {
        let mut m = base;
        for row in 0..3 {
            m[row][col] = a[row][3];
        }
        out[col] = det(m) / d;
    }
    Some(out)
}

fn feasible(point: [f64; 3], rows: &[Constraint]) -> bool {
    if point.iter().any(|&v| v < -TOLERANCE || !v.is_finite()) {
        return false;
    }
    rows.iter().all(|r| {
        r.coeffs[0] * point[0] + r.coeffs[1] * point[1] + r.coeffs[2] * point[2]
            >= r.rhs - TOLERANCE
    })
}

/// Minimize `a + b + c` over the constraints. Rows with a nonpositive
/// right-hand side are vacuous under nonnegativity and are dropped.
pub fn minimize_sum(rows: &[Constraint]) -> Lp3Outcome {
    let active: Vec<Constraint> = rows
        .iter()
        .copied()
        .filter(|r| r.rhs > TOLERANCE)
        .collect();
    if active.is_empty() {
        return Lp3Outcome::Optimal {
            point: [0.0; 3],
            objective: 0.0,
        };
    }

    // planes: the constraint rows followed by a=0, b=0, c=0
    let mut planes: Vec<[f64; 4]> = active
        .iter()
        .map(|r| [r.coeffs[0], r.coeffs[1], r.coeffs[2], r.rhs])
        .collect();
    planes.push([1.0, 0.0, 0.0, 0.0]);
    planes.push([0.0, 1.0, 0.0, 0.0]);
    planes.push([0.0, 0.0, 1.0, 0.0]);
    planes.sort_by(|x, y| x.partial_cmp(y).unwrap());
    planes.dedup_by(|x, y| x.iter().zip(y.iter()).all(|(a, b)| (a - b).abs() < 1e-12));

    let mut best: Option<([f64; 3], f64)> = None;
    let k = planes.len();
    for i in 0..k {
        for j in (i + 1)..k {
            for l in (j + 1)..k {
                let Some(point) = solve3([planes[i], planes[j], planes[l]]) else {
                    continue;
                };
                if !feasible(point, &active) {
                    continue;
                }
                let clamped = point.map(|v| v.max(0.0));
                let objective = clamped.iter().sum();
                let better = match best {
                    None => true,
                    Some((bp, bo)) => {
                        objective < bo - TOLERANCE
                            || (objective <= bo + TOLERANCE && clamped < bp)
                    }
                };
                if better {
                    best = Some((clamped, objective));
                }
            }
        }
    }
    match best {
        Some((point, objective)) => Lp3Outcome::Optimal { point, objective },
        None => Lp3Outcome::Infeasible,
    }
}
