//! Planar-diagram codes.
//!
//! Each crossing lists its four incident edges counterclockwise, starting
//! with the incoming under-edge. Edges are labelled `1..=2N` consecutively
//! along the orientation of the knot.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PDCode {
    crossings: Vec<[u32; 4]>,
}

impl PDCode {
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<Self> {
        let pd = Self { crossings };
        pd.validate()?;
        Ok(pd)
    }

    /// Zero crossings: the round unknot.
    pub fn unknot() -> Self {
        Self { crossings: Vec::new() }
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    fn validate(&self) -> Result<()> {
        let edges = self.edge_count() as u32;
        let mut seen = vec![0u8; edges as usize + 1];
        for x in &self.crossings {
            for &e in x {
                if e == 0 || e > edges {
                    return Err(Error::MalformedPd(format!("edge label {e} outside 1..={edges}")));
                }
                seen[e as usize] += 1;
            }
            if self.next(x[0]) != x[2] {
                return Err(Error::MalformedPd(format!("under-strand {} -> {} is not consecutive", x[0], x[2])));
            }
            if self.next(x[1]) != x[3] && self.next(x[3]) != x[1] {
                return Err(Error::MalformedPd(format!("over-strand {} / {} is not consecutive", x[1], x[3])));
            }
        }
        if let Some(e) = (1..=edges as usize).find(|&e| seen[e] != 2) {
            return Err(Error::MalformedPd(format!("edge {e} appears {} times", seen[e])));
        }
        Ok(())
    }

    fn next(&self, e: u32) -> u32 {
        e % self.edge_count() as u32 + 1
    }

    /// `+1` when the over-strand leaves through the second slot.
    pub fn sign(&self, index: usize) -> i8 {
        let [_, b, _, d] = self.crossings[index];
        if self.edge_count() == 2 {
            // Both over-edges follow each other; fall back on label order.
            return if b == d + 1 { 1 } else { -1 };
        }
        if self.next(d) == b {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossings.len()).map(|i| self.sign(i) as i64).sum()
    }

    /// Components obtained by following strands through crossings.
    pub fn component_count(&self) -> usize {
        let edges = self.edge_count();
        if edges == 0 {
            return 1;
        }
        // Each crossing joins a→c and the two over-edges.
        let mut parent: Vec<usize> = (0..=edges).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for &[a, b, c, d] in &self.crossings {
            for (u, v) in [(a, c), (b, d)] {
                let (ru, rv) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
                parent[ru] = rv;
            }
        }
        (1..=edges).filter(|&e| find(&mut parent, e) == e).count()
    }

    /// PD code of the closure of a braid.
    ///
    /// Time runs upward and strand positions run left to right. A positive
    /// letter puts the strand moving rightward on top, which makes it a
    /// positive crossing.
    pub fn from_braid_closure(w: &BraidWord) -> Result<Self> {
        let n = w.strands();
        let components = w.underlying_permutation().cycle_count();
        if components != 1 {
            return Err(Error::NotAKnot(components));
        }
        if w.is_empty() {
            return Ok(Self::unknot());
        }
        // Letters in time order.
        let steps: Vec<i32> = w.letters().iter().rev().copied().collect();
        let mut visits = Vec::with_capacity(2 * steps.len());
        let mut position = 0usize;
        loop {
            for (k, &l) in steps.iter().enumerate() {
                let p = l.unsigned_abs() as usize - 1;
                let moving_right = if position == p {
                    true
                } else if position == p + 1 {
                    false
                } else {
                    continue;
                };
                let over = moving_right == (l > 0);
                let direction = if moving_right { (1, 1) } else { (-1, 1) };
                visits.push(Visit { crossing: k, over, direction });
                position = if moving_right { p + 1 } else { p };
            }
            if position == 0 {
                break;
            }
        }
        debug_assert_eq!(visits.len(), 2 * steps.len());
        debug_assert!(n >= 2);
        Self::from_visits(steps.len(), &visits)
    }

    /// Assembles a PD code from the cyclic sequence of crossing visits along
    /// the knot. Every crossing must be visited exactly twice, once over and
    /// once under.
    pub(crate) fn from_visits(crossing_count: usize, visits: &[Visit]) -> Result<Self> {
        let total = visits.len() as u32;
        if total as usize != 2 * crossing_count {
            return Err(Error::MalformedPd(format!("{} visits for {crossing_count} crossings", visits.len())));
        }
        // Edge k+1 runs from visit k to visit k+1.
        let incoming = |k: usize| if k == 0 { total } else { k as u32 };
        let outgoing = |k: usize| k as u32 + 1;

        let mut under: Vec<Option<usize>> = vec![None; crossing_count];
        let mut over: Vec<Option<usize>> = vec![None; crossing_count];
        for (k, v) in visits.iter().enumerate() {
            let slot = if v.over { &mut over[v.crossing] } else { &mut under[v.crossing] };
            if slot.replace(k).is_some() {
                return Err(Error::MalformedPd(format!("crossing {} visited twice on one level", v.crossing)));
            }
        }
        let mut crossings = Vec::with_capacity(crossing_count);
        for c in 0..crossing_count {
            let (Some(u), Some(o)) = (under[c], over[c]) else {
                return Err(Error::MalformedPd(format!("crossing {c} lacks an over or under visit")));
            };
            let du = visits[u].direction;
            let dor = visits[o].direction;
            let back_u = (-du.0 as i128, -du.1 as i128);
            let turn = back_u.0 * dor.1 as i128 - back_u.1 * dor.0 as i128;
            let tuple = if turn > 0 {
                [incoming(u), outgoing(o), outgoing(u), incoming(o)]
            } else {
                [incoming(u), incoming(o), outgoing(u), outgoing(o)]
            };
            crossings.push(tuple);
        }
        Self::new(crossings)
    }
}

/// One passage of the knot through a crossing.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Visit {
    pub crossing: usize,
    pub over: bool,
    pub direction: (i64, i64),
}

/// One `X a b c d` line per crossing.
impl fmt::Display for PDCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for [a, b, c, d] in &self.crossings {
            writeln!(f, "X {a} {b} {c} {d}")?;
        }
        Ok(())
    }
}

impl FromStr for PDCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut crossings = Vec::new();
        let mut offset = 0;
        for line in s.split_inclusive('\n') {
            let body = line.trim();
            if !body.is_empty() {
                let mut parts = body.split_whitespace();
                if parts.next() != Some("X") {
                    return Err(Error::Parse { position: offset, message: "expected 'X'".into() });
                }
                let labels: Vec<u32> = parts
                    .map(|p| p.parse::<u32>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::Parse { position: offset, message: "invalid edge label".into() })?;
                let quad: [u32; 4] = labels
                    .try_into()
                    .map_err(|_| Error::Parse { position: offset, message: "expected four labels".into() })?;
                crossings.push(quad);
            }
            offset += line.len();
        }
        Self::new(crossings)
    }
}
