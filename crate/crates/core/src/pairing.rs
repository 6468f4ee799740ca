//! Combinatorial evaluation of the graded intersection pairing.
//!
//! A pairing between a product of red segments and a product of green closed
//! curves is the sum, over intersection points of the two configuration-space
//! submanifolds, of `sign · φ^{-k}(loop)`. Intersection points are matchings:
//! every red segment copy is assigned one crossing with a green curve, and
//! every green curve receives exactly its required number of points.
//!
//! Punctures of a [`CurveSystem`] are 0-based code slots. Puncture indices in
//! a [`LoopWord`] are 1-based, so slot `p` is puncture `p + 1`.

use serde::{Deserialize, Serialize};

use crate::invariant::{is_symmetric, points};
use crate::lawrence::{enumerate_basis, CodeSequence};
use crate::par::{self, Exec};
use crate::ring::json::PolyJson;
use crate::ring::{IntPoly, Vars};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum LoopEvent {
    Wind { puncture: usize, sign: i32 },
    Swap { sign: i32 },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LoopWord(pub Vec<LoopEvent>);

impl LoopWord {
    pub fn new(events: Vec<LoopEvent>) -> Self {
        LoopWord(events)
    }

    pub fn wind(puncture: usize, sign: i32) -> Self {
        LoopWord(vec![LoopEvent::Wind { puncture, sign }])
    }

    pub fn swap(sign: i32) -> Self {
        LoopWord(vec![LoopEvent::Swap { sign }])
    }

    pub fn concat(&self, other: &LoopWord) -> LoopWord {
        LoopWord(self.0.iter().chain(&other.0).copied().collect())
    }
}

/// Exponents `(a, b)` of `φ^{-k}(l) = x^a d^b` on an `n`-punctured disc.
pub fn local_system_exponents(l: &LoopWord, n: usize, k: usize) -> Result<(i32, i32), Error> {
    if k > n {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds n = {n}")));
    }
    let (mut a, mut b) = (0i32, 0i32);
    for ev in &l.0 {
        match *ev {
            LoopEvent::Wind { puncture, sign } => {
                if puncture == 0 || puncture > n {
                    return Err(Error::InvalidArgument(format!(
                        "puncture {puncture} outside 1..={n}"
                    )));
                }
                a += if puncture <= n - k { sign } else { -sign };
            }
            LoopEvent::Swap { sign } => b += sign,
        }
    }
    Ok((a, b))
}

/// `φ^{-k}(l)` as a monomial in `(x, d)`.
pub fn eval_local_system(l: &LoopWord, n: usize, k: usize) -> Result<IntPoly, Error> {
    let (a, b) = local_system_exponents(l, n, k)?;
    Ok(IntPoly::mono(Vars::xd(), &[a, b], 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    FigureEight,
    Circle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreenCurve {
    pub kind: CurveKind,
    pub pair: (usize, usize),
    pub points: u32,
}

impl GreenCurve {
    /// The loop running once around the curve: one positive winding around
    /// each enclosed puncture.
    pub fn boundary_loop(&self) -> LoopWord {
        LoopWord(vec![
            LoopEvent::Wind {
                puncture: self.pair.0 + 1,
                sign: 1,
            },
            LoopEvent::Wind {
                puncture: self.pair.1 + 1,
                sign: 1,
            },
        ])
    }
}

/// One intersection of a red segment copy with a green curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    /// Puncture the red segment ends at.
    pub segment: usize,
    /// Which parallel copy of that segment.
    pub copy: u32,
    /// Index into the green curve list.
    pub green: usize,
    pub sign: i32,
    #[serde(default)]
    pub loop_word: LoopWord,
}

/// Green curves plus the crossing table. Red multiplicities come from the
/// code sequence being paired.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSystem {
    pub punctures: usize,
    pub green: Vec<GreenCurve>,
    pub crossings: Vec<Crossing>,
}

impl CurveSystem {
    /// The dual system for `(n, N)`: on `2n - 1` punctures, figure-eight `k`
    /// encloses slots `(k, 2n-1-k)` and carries `N - 1` points. Every copy of
    /// a segment ending at either slot crosses it once, positively, with a
    /// trivial connecting loop. Segments ending at slot 0 cross nothing.
    pub fn dual(n: usize, colour: u32) -> Self {
        let punctures = 2 * n - 1;
        let max_copies = points(n, colour);
        let mut green = Vec::new();
        let mut crossings = Vec::new();
        for k in 1..n {
            let g = green.len();
            green.push(GreenCurve {
                kind: CurveKind::FigureEight,
                pair: (k, punctures - k),
                points: colour - 1,
            });
            for segment in [k, punctures - k] {
                for copy in 0..max_copies {
                    crossings.push(Crossing {
                        segment,
                        copy,
                        green: g,
                        sign: 1,
                        loop_word: LoopWord::default(),
                    });
                }
            }
        }
        CurveSystem {
            punctures,
            green,
            crossings,
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self, Error> {
        let cs: CurveSystem =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("curve system: {e}")))?;
        cs.validate()?;
        Ok(cs)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("curve system serialization cannot fail")
    }

    pub fn validate(&self) -> Result<(), Error> {
        for g in &self.green {
            if g.pair.0 >= self.punctures || g.pair.1 >= self.punctures {
                return Err(Error::InvalidArgument(format!(
                    "green curve around {:?} outside {} punctures",
                    g.pair, self.punctures
                )));
            }
        }
        for c in &self.crossings {
            if c.green >= self.green.len() || c.segment >= self.punctures {
                return Err(Error::InvalidArgument(format!("dangling crossing {c:?}")));
            }
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::InvalidArgument(format!("crossing sign {}", c.sign)));
            }
            local_system_exponents(&c.loop_word, self.punctures, 0)?;
        }
        Ok(())
    }
}

struct Search<'a> {
    /// Candidate crossings for each red copy.
    options: Vec<Vec<&'a Crossing>>,
    capacity: Vec<u32>,
    n: usize,
    k: usize,
}

impl Search<'_> {
    fn run(&mut self, idx: usize, sign: i32, exps: (i32, i32), acc: &mut Vec<(i32, i32, i32)>) {
        if idx == self.options.len() {
            if self.capacity.iter().all(|&c| c == 0) {
                acc.push((sign, exps.0, exps.1));
            }
            return;
        }
        for ci in 0..self.options[idx].len() {
            let c = self.options[idx][ci];
            if self.capacity[c.green] == 0 {
                continue;
            }
            let (a, b) = local_system_exponents(&c.loop_word, self.n, self.k)
                .expect("validated crossing table");
            self.capacity[c.green] -= 1;
            self.run(idx + 1, sign * c.sign, (exps.0 + a, exps.1 + b), acc);
            self.capacity[c.green] += 1;
        }
    }
}

/// `Σ_matchings Π sign · φ^{-k}(l)` for red segments with multiplicities `e`.
pub fn pair_curve_system(cs: &CurveSystem, e: &CodeSequence, k: usize) -> Result<IntPoly, Error> {
    if e.len() != cs.punctures {
        return Err(Error::SpaceMismatch(format!(
            "{e:?} has {} slots, curve system has {} punctures",
            e.len(),
            cs.punctures
        )));
    }
    let green_total: u32 = cs.green.iter().map(|g| g.points).sum();
    if e.total() != green_total {
        return Err(Error::SpaceMismatch(format!(
            "{} red points against {green_total} green points",
            e.total()
        )));
    }
    cs.validate()?;
    let mut options = Vec::new();
    for (segment, &mult) in e.entries().iter().enumerate() {
        for copy in 0..mult {
            options.push(
                cs.crossings
                    .iter()
                    .filter(|c| c.segment == segment && c.copy == copy)
                    .collect(),
            );
        }
    }
    let mut search = Search {
        options,
        capacity: cs.green.iter().map(|g| g.points).collect(),
        n: cs.punctures,
        k,
    };
    let mut found = Vec::new();
    search.run(0, 1, (0, 0), &mut found);
    let mut out = IntPoly::zero(Vars::xd());
    for (sign, a, b) in found {
        out.add_assign_owned(IntPoly::mono(Vars::xd(), &[a, b], sign as i64));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaEntry {
    pub e: Vec<u32>,
    pub value: PolyJson,
    pub expected: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaReport {
    pub n: usize,
    #[serde(rename = "N")]
    pub colour: u32,
    pub checked: usize,
    pub ones: usize,
    pub violations: Vec<DeltaEntry>,
    pub entries: Vec<DeltaEntry>,
}

impl DeltaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that the default dual system pairs to the Kronecker delta of the
/// symmetric index set.
pub fn verify_delta(n: usize, colour: u32) -> Result<DeltaReport, Error> {
    verify_delta_with(&CurveSystem::dual(n, colour), n, colour, Exec::default())
}

/// As [`verify_delta`] against an arbitrary curve system.
pub fn verify_delta_with(
    cs: &CurveSystem,
    n: usize,
    colour: u32,
    exec: Exec,
) -> Result<DeltaReport, Error> {
    if n == 0 || colour == 0 {
        return Err(Error::InvalidArgument("n and N must be at least 1".into()));
    }
    let space = enumerate_basis(2 * n - 1, points(n, colour));
    let one = IntPoly::one(Vars::xd());
    let entries = par::map_collect(exec, space.basis(), |e| {
        let value = pair_curve_system(cs, e, 0)?;
        let expected = is_symmetric(e.entries(), n, colour) as i64;
        let ok = if expected == 1 {
            value == one
        } else {
            value.is_zero()
        };
        Ok((
            DeltaEntry {
                e: e.entries().to_vec(),
                value: value.to_json(),
                expected,
            },
            ok,
            !value.is_zero(),
        ))
    })
    .into_iter()
    .collect::<Result<Vec<_>, Error>>()?;
    let violations = entries
        .iter()
        .filter(|(_, ok, _)| !ok)
        .map(|(d, _, _)| d.clone())
        .collect();
    Ok(DeltaReport {
        n,
        colour,
        checked: entries.len(),
        ones: entries.iter().filter(|(_, _, nz)| *nz).count(),
        violations,
        entries: entries.into_iter().map(|(d, _, _)| d).collect(),
    })
}
