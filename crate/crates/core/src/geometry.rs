//! Affine lines over the d×d grid and their partition into striations.
//!
//! A line is the solution set of a·q + b·p = c with (a, b) ≠ (0, 0); its
//! identity is the point set (scalar multiples of the coefficient triple give
//! the same line, the triple is kept as provenance only). Striations are
//! ordered: vertical lines q = c first, then slope m = 0, 1, …, d−1 lines
//! p = m·q + c, with the d lines of each striation ordered by c.

use crate::error::Error;
use crate::field::GaloisField;
use crate::Result;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PhasePoint {
    pub q: usize,
    pub p: usize,
}

impl PhasePoint {
    pub fn new(q: usize, p: usize) -> Self {
        Self { q, p }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Line {
    /// Defining coefficients of a·q + b·p = c, kept as provenance.
    pub a: usize,
    pub b: usize,
    pub c: usize,
    /// The d member points, sorted; this is the line's identity.
    pub points: Vec<PhasePoint>,
}

impl Line {
    fn solve(field: &GaloisField, a: usize, b: usize, c: usize) -> Self {
        let mut points = Vec::with_capacity(field.d);
        for q in field.elements() {
            for p in field.elements() {
                if field.add(field.mul(a, q), field.mul(b, p)) == c {
                    points.push(PhasePoint::new(q, p));
                }
            }
        }
        points.sort();
        Line { a, b, c, points }
    }

    pub fn contains(&self, pt: PhasePoint) -> bool {
        self.points.binary_search(&pt).is_ok()
    }
}

impl PartialEq for Line {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points
    }
}
impl Eq for Line {}

#[derive(Debug, Clone, Serialize)]
pub struct Striation {
    pub index: usize,
    pub lines: Vec<Line>,
}

/// The full geometric arena: field plus its d+1 striations.
#[derive(Debug, Clone)]
pub struct PhaseSpace {
    pub field: GaloisField,
    pub striations: Vec<Striation>,
}

impl PhaseSpace {
    pub fn new(d: usize) -> Result<Self> {
        let field = match d {
            2 => crate::field::build_field(2, 1)?,
            3 => crate::field::build_field(3, 1)?,
            4 => crate::field::build_field(2, 2)?,
            _ => return Err(Error::UnsupportedDimension(d)),
        };
        let striations = build_striations(&field);
        Ok(PhaseSpace { field, striations })
    }

    pub fn dim(&self) -> usize {
        self.field.d
    }

    pub fn points(&self) -> impl Iterator<Item = PhasePoint> + '_ {
        let d = self.dim();
        (0..d).flat_map(move |q| (0..d).map(move |p| PhasePoint::new(q, p)))
    }

    /// Index of the striation-`i` line passing through `pt`.
    pub fn line_through(&self, i: usize, pt: PhasePoint) -> usize {
        self.striations[i]
            .lines
            .iter()
            .position(|l| l.contains(pt))
            .expect("striations partition the grid")
    }
}

/// Every distinct line of the grid: all coefficient triples, deduplicated by
/// point set. Yields d(d+1) lines.
pub fn enumerate_lines(field: &GaloisField) -> Vec<Line> {
    let d = field.d;
    let mut lines: Vec<Line> = Vec::new();
    for a in 0..d {
        for b in 0..d {
            if a == 0 && b == 0 {
                continue;
            }
            for c in 0..d {
                let line = Line::solve(field, a, b, c);
                if !lines.contains(&line) {
                    lines.push(line);
                }
            }
        }
    }
    lines
}

/// The d+1 parallel classes: q = c, then p = m·q + c for m = 0, …, d−1.
pub fn build_striations(field: &GaloisField) -> Vec<Striation> {
    let d = field.d;
    let mut striations = Vec::with_capacity(d + 1);
    let vertical = (0..d).map(|c| Line::solve(field, 1, 0, c)).collect();
    striations.push(Striation { index: 0, lines: vertical });
    for m in 0..d {
        // p = m·q + c  ⇔  (−m)·q + p = c
        let a = (0..d).find(|&x| field.add(field.mul(m, 1), x) == 0).unwrap();
        let lines = (0..d).map(|c| Line::solve(field, a, 1, c)).collect();
        striations.push(Striation { index: m + 1, lines });
    }
    striations
}

/// Report of the three line-geometry axioms.
#[derive(Debug, Clone, Serialize)]
pub struct GeometryReport {
    pub dim: usize,
    /// (i) a unique line through every point pair.
    pub pair_violations: Vec<String>,
    /// (ii) non-parallel lines intersect in exactly one point.
    pub intersection_violations: Vec<String>,
    /// (iii) unique parallel through every external point.
    pub parallel_violations: Vec<String>,
}

impl GeometryReport {
    pub fn pass(&self) -> bool {
        self.pair_violations.is_empty()
            && self.intersection_violations.is_empty()
            && self.parallel_violations.is_empty()
    }
}

/// Exhaustively verify axioms (i)–(iii) on a striation set. Violations are
/// reported, never raised.
pub fn verify_geometry(striations: &[Striation]) -> GeometryReport {
    let d = striations.first().map(|s| s.lines.len()).unwrap_or(0);
    let all_lines: Vec<&Line> = striations.iter().flat_map(|s| s.lines.iter()).collect();
    let mut report = GeometryReport {
        dim: d,
        pair_violations: Vec::new(),
        intersection_violations: Vec::new(),
        parallel_violations: Vec::new(),
    };

    let points: Vec<PhasePoint> = (0..d)
        .flat_map(|q| (0..d).map(move |p| PhasePoint::new(q, p)))
        .collect();
    for (i, &x) in points.iter().enumerate() {
        for &y in &points[i + 1..] {
            let count = all_lines.iter().filter(|l| l.contains(x) && l.contains(y)).count();
            if count != 1 {
                report
                    .pair_violations
                    .push(format!("points {x:?},{y:?} lie on {count} common lines"));
            }
        }
    }

    for (si, s) in striations.iter().enumerate() {
        for (sj, t) in striations.iter().enumerate() {
            if si >= sj {
                continue;
            }
            for l in &s.lines {
                for m in &t.lines {
                    let shared = l.points.iter().filter(|pt| m.contains(**pt)).count();
                    if shared != 1 {
                        report.intersection_violations.push(format!(
                            "striation {si} line and striation {sj} line share {shared} points"
                        ));
                    }
                }
            }
        }
    }

    for s in striations.iter() {
        for l in &s.lines {
            for &pt in &points {
                if l.contains(pt) {
                    continue;
                }
                let parallels = s
                    .lines
                    .iter()
                    .filter(|m| *m != l && m.contains(pt))
                    .count();
                if parallels != 1 {
                    report.parallel_violations.push(format!(
                        "striation {} point {:?}: {} parallels through it",
                        s.index, pt, parallels
                    ));
                }
            }
        }
    }
    report
}
