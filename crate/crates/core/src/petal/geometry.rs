//! Exact planar model of a petal diagram.
//!
//! The `L` passes are straight lines. Pass `j` leaves the centre towards
//! slot `aⱼ = (j(L+1) + L) mod 2L` of `2L` slots spaced evenly around a
//! square, so consecutive passes rotate by half a slot pair and every petal
//! joins two neighbouring slots. Each line is shifted sideways by its own
//! integer offset, which splits the multi-crossing into `L(L-1)/2` ordinary
//! crossings. All arithmetic is in integers.

use std::cmp::Ordering;

use super::{PDCode, PetalPermutation, Visit};

type Point = (i64, i64);

fn cross(a: Point, b: Point) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

/// Point at perimeter parameter `u` on the square of half-side `m`, starting
/// at `(m, 0)` and running counterclockwise. Antipodal: `u + 4m ↦ -p`.
fn square_point(u: i64, m: i64) -> Point {
    let u = u.rem_euclid(8 * m);
    match u {
        _ if u <= m => (m, u),
        _ if u <= 3 * m => (m - (u - m), m),
        _ if u <= 5 * m => (-m, m - (u - 3 * m)),
        _ if u <= 7 * m => (-m + (u - 5 * m), -m),
        _ => (m, -m + (u - 7 * m)),
    }
}

struct Line {
    direction: Point,
    offset: i64,
}

/// Position of the crossing of `a` with `b` along `a`, as a fraction.
fn parameter(a: &Line, b: &Line) -> (i128, i128) {
    let (da, db) = (a.direction, b.direction);
    let det = cross(da, db);
    let x = a.offset as i128 * db.0 as i128 - da.0 as i128 * b.offset as i128;
    let y = db.1 as i128 * a.offset as i128 - da.1 as i128 * b.offset as i128;
    let num = da.0 as i128 * x + da.1 as i128 * y;
    if det < 0 {
        (-num, -det)
    } else {
        (num, det)
    }
}

fn compare(p: (i128, i128), q: (i128, i128)) -> Ordering {
    (p.0 * q.1).cmp(&(q.0 * p.1))
}

fn lines(l: usize, seed: u64) -> Vec<Line> {
    let m = l as i64;
    let slots = 2 * l;
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut used = std::collections::BTreeSet::new();
    (0..l)
        .map(|j| {
            let slot = (j * (l + 1) + l) % slots;
            let offset = loop {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let candidate = ((state >> 33) % (8 * l as u64 * l as u64 + 1)) as i64 - 4 * (l * l) as i64;
                if used.insert(candidate) {
                    break candidate;
                }
            };
            Line { direction: square_point(4 * slot as i64, m), offset }
        })
        .collect()
}

/// Crossings of each line sorted along its direction, or `None` if three
/// lines meet in a point.
fn orders(lines: &[Line]) -> Option<Vec<Vec<usize>>> {
    let mut result = Vec::with_capacity(lines.len());
    for (j, a) in lines.iter().enumerate() {
        let mut others: Vec<(usize, (i128, i128))> =
            lines.iter().enumerate().filter(|&(k, _)| k != j).map(|(k, b)| (k, parameter(a, b))).collect();
        others.sort_by(|x, y| compare(x.1, y.1));
        if others.windows(2).any(|w| compare(w[0].1, w[1].1) == Ordering::Equal) {
            return None;
        }
        result.push(others.into_iter().map(|(k, _)| k).collect());
    }
    Some(result)
}

/// Planar diagram of a petal permutation with exactly `L(L-1)/2` crossings.
pub fn petal_to_pd(p: &PetalPermutation) -> PDCode {
    let l = p.len();
    let heights = p.heights();
    let (lines, orders) = (0u64..)
        .find_map(|seed| {
            let lines = lines(l, seed);
            orders(&lines).map(|o| (lines, o))
        })
        .expect("generic offsets exist");

    let index = |j: usize, k: usize| {
        let (a, b) = if j < k { (j, k) } else { (k, j) };
        a * l - a * (a + 1) / 2 + (b - a - 1)
    };
    let mut visits = Vec::with_capacity(l * (l - 1));
    for (j, order) in orders.iter().enumerate() {
        for &k in order {
            visits.push(Visit { crossing: index(j, k), over: heights[j] > heights[k], direction: lines[j].direction });
        }
    }
    PDCode::from_visits(l * (l - 1) / 2, &visits).expect("petal visits form a knot diagram")
}
