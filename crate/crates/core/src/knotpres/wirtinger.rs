//! Wirtinger presentation of a four-band pretzel diagram, built by walking
//! the strand once around the knot.

use std::collections::BTreeMap;

use super::presentation::{validate_params, KnotParamError, Presentation, PresentationError, Relation, Sign};
use super::reduced::BoundaryArc;
use super::word::{Gen, GroupWord};

/// Passages through the bands in the order the strand visits them:
/// `(band, direction, starting side)`, direction `+1` downward.
const TRAVERSAL: [(usize, i64, u8); 8] = [
    (0, 1, 0),
    (3, -1, 1),
    (2, 1, 1),
    (1, -1, 1),
    (0, 1, 1),
    (1, -1, 0),
    (2, 1, 0),
    (3, -1, 0),
];

/// Handedness of the twist bands. A band with positive crossing count has
/// its left-to-right strand passing under.
const HANDEDNESS: i64 = -1;

/// Names of the arcs at passage boundaries, in order of first appearance
/// along the traversal.
const BOUNDARY_ORDER: [BoundaryArc; 8] = [
    BoundaryArc::Alpha,
    BoundaryArc::A,
    BoundaryArc::Beta,
    BoundaryArc::C,
    BoundaryArc::Eta,
    BoundaryArc::E,
    BoundaryArc::Gamma,
    BoundaryArc::B,
];

#[derive(Clone, Copy, Debug)]
struct Event {
    crossing: (usize, usize),
    over: bool,
    dir: (i64, i64),
}

/// One Wirtinger relation `out = over^sign · input · over^{-sign}` before
/// renumbering.
#[derive(Clone, Copy, Debug)]
struct RawCrossing {
    over: usize,
    input: usize,
    output: usize,
    sign: i64,
}

/// Walked diagram: the Wirtinger presentation plus the arcs at the eight
/// passage boundaries.
#[derive(Clone, Debug)]
pub struct PretzelDiagram {
    pub band_counts: [i64; 4],
    pub presentation: Presentation,
    pub boundary: BTreeMap<BoundaryArc, Gen>,
    /// Band holding the crossing of each relation.
    pub relation_band: Vec<usize>,
    /// `(band, first arc, last arc)` for each passage in traversal order.
    pub passages: Vec<(usize, Gen, Gen)>,
}

/// Signed crossing counts of the four bands.
pub fn band_counts(n: i64, m: i64, sign: Sign) -> [i64; 4] {
    [2 * n, m, -(2 * n + sign.unit()), -m]
}

pub fn pretzel_diagram(n: i64, m: i64, sign: Sign) -> Result<PretzelDiagram, KnotParamError> {
    validate_params(n, m)?;
    let counts = band_counts(n, m, sign);

    let mut events = Vec::new();
    let mut passage_spans = Vec::new();
    for &(band, d, start) in &TRAVERSAL {
        let c = counts[band].unsigned_abs() as usize;
        let h = counts[band].signum() * HANDEDNESS;
        let first = events.len();
        let mut pos = start;
        let js: Box<dyn Iterator<Item = usize>> = if d == 1 { Box::new(0..c) } else { Box::new((0..c).rev()) };
        for j in js {
            let top = if d == 1 { pos } else { 1 - pos };
            let left_to_right = top == 0;
            let over = (left_to_right && h == 1) || (!left_to_right && h == -1);
            let dx = if left_to_right { d } else { -d };
            events.push(Event {
                crossing: (band, j),
                over,
                dir: (dx, -d),
            });
            pos = 1 - pos;
        }
        passage_spans.push((first, events.len() - 1));
    }

    // Arcs are cut at under-passes; arc k begins after the k-th under-pass.
    let arc_count = events.iter().filter(|e| !e.over).count();
    let mut arc_before = vec![0usize; events.len()];
    let mut arc_after = vec![0usize; events.len()];
    let mut cur = arc_count - 1;
    for (i, e) in events.iter().enumerate() {
        arc_before[i] = cur;
        if !e.over {
            cur = (cur + 1) % arc_count;
        }
        arc_after[i] = cur;
    }

    let mut by_crossing: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut crossing_order = Vec::new();
    for (i, e) in events.iter().enumerate() {
        let slot = by_crossing.entry(e.crossing).or_default();
        if slot.is_empty() {
            crossing_order.push(e.crossing);
        }
        slot.push(i);
    }
    let crossings: Vec<RawCrossing> = crossing_order
        .iter()
        .map(|key| {
            let pair = &by_crossing[key];
            let (o, u) = if events[pair[0]].over {
                (pair[0], pair[1])
            } else {
                (pair[1], pair[0])
            };
            debug_assert!(events[o].over && !events[u].over);
            let (odx, ody) = events[o].dir;
            let (udx, udy) = events[u].dir;
            let sign = if odx * udy - ody * udx > 0 { 1 } else { -1 };
            RawCrossing {
                over: arc_before[o],
                input: arc_before[u],
                output: arc_after[u],
                sign,
            }
        })
        .collect();

    let mut seen: Vec<usize> = Vec::new();
    for &(first, last) in &passage_spans {
        for arc in [arc_before[first], arc_after[last]] {
            if !seen.contains(&arc) {
                seen.push(arc);
            }
        }
    }
    assert_eq!(seen.len(), 8, "pretzel diagram must have eight passage-boundary arcs");

    // Renumber cyclically so that the arc named e becomes the first
    // generator.
    let e_raw = seen[BOUNDARY_ORDER.iter().position(|&b| b == BoundaryArc::E).unwrap()];
    let renum = |a: usize| Gen((a + arc_count - e_raw) % arc_count);

    let boundary = BOUNDARY_ORDER.iter().zip(&seen).map(|(&b, &a)| (b, renum(a))).collect();
    let relations = crossings
        .iter()
        .map(|c| {
            Relation::new(
                renum(c.output),
                GroupWord::gen(renum(c.over)),
                c.sign,
                GroupWord::gen(renum(c.input)),
            )
        })
        .collect();
    let names = (1..=arc_count).map(|i| format!("x{i}")).collect();
    let passages = TRAVERSAL
        .iter()
        .zip(&passage_spans)
        .map(|(&(band, _, _), &(first, last))| (band, renum(arc_before[first]), renum(arc_after[last])))
        .collect();
    Ok(PretzelDiagram {
        band_counts: counts,
        presentation: Presentation::new(names, relations, Gen(0)),
        boundary,
        relation_band: crossing_order.iter().map(|&(band, _)| band).collect(),
        passages,
    })
}

pub fn wirtinger_presentation(n: i64, m: i64, sign: Sign) -> Result<Presentation, KnotParamError> {
    Ok(pretzel_diagram(n, m, sign)?.presentation)
}

impl PretzelDiagram {
    /// Pushes each band's two incoming arcs through the band's crossings
    /// and reads off the two outgoing arcs. Returns, for every boundary
    /// arc, its expression in the boundary generators of the reduced
    /// presentation.
    pub fn boundary_relations(&self) -> Result<BTreeMap<BoundaryArc, GroupWord>, PresentationError> {
        let pres = &self.presentation;
        let arc_name: BTreeMap<Gen, BoundaryArc> = self.boundary.iter().map(|(&b, &g)| (g, b)).collect();
        let mut out = BTreeMap::new();
        for band in 0..4 {
            let through: Vec<&(usize, Gen, Gen)> = self.passages.iter().filter(|p| p.0 == band).collect();
            let mut expr: BTreeMap<Gen, GroupWord> = through
                .iter()
                .map(|&&(_, start, _)| (start, GroupWord::gen(arc_name[&start].gen())))
                .collect();
            let mut pending: Vec<_> = pres
                .relations()
                .iter()
                .zip(&self.relation_band)
                .filter(|(_, &b)| b == band)
                .map(|(r, _)| r)
                .collect();
            while !pending.is_empty() {
                let before = pending.len();
                pending.retain(|r| {
                    let over = r.base.letters()[0].gen;
                    let input = r.inner.letters()[0].gen;
                    match (expr.get(&over), expr.get(&input)) {
                        (Some(o), Some(i)) => {
                            let w = i.conjugated_by(o, r.power);
                            expr.insert(r.target, w);
                            false
                        }
                        _ => true,
                    }
                });
                if pending.len() == before {
                    return Err(PresentationError::Unreached { missing: pending.len() });
                }
            }
            for &&(_, _, end) in &through {
                let arc = arc_name[&end];
                if out.insert(arc, expr[&end].clone()).is_some() {
                    return Err(PresentationError::Diagram(format!(
                        "boundary arc {} leaves two passages",
                        arc.name()
                    )));
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_count_is_one_per_crossing() {
        for (n, m, sign) in [(2, 3, Sign::Plus), (3, 5, Sign::Plus), (2, 3, Sign::Minus)] {
            let p = wirtinger_presentation(n, m, sign).unwrap();
            let crossings = 4 * n + 2 * m + sign.unit();
            assert_eq!(p.generator_count() as i64, crossings);
            assert_eq!(p.relations().len() as i64, crossings);
        }
    }

    #[test]
    fn meridian_is_arc_e() {
        let d = pretzel_diagram(2, 3, Sign::Plus).unwrap();
        assert_eq!(d.boundary[&BoundaryArc::E], Gen(0));
        assert_eq!(d.presentation.meridian(), Gen(0));
    }

    #[test]
    fn invalid_parameters() {
        assert_eq!(
            wirtinger_presentation(3, 6, Sign::Plus).unwrap_err(),
            KnotParamError::MEven(6)
        );
        assert!(wirtinger_presentation(0, 3, Sign::Plus).is_err());
        assert!(wirtinger_presentation(1, 1, Sign::Plus).is_err());
    }
}
