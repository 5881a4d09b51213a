//! Claim harness: recomputes the boundary ideals of the fans of `(x,y⁴)^n` and of a few small
//! ideals, compares them with the stated formulas and transcribed figures, and reports.

pub mod claims;
pub mod golden;
pub mod perm;

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fan::json::diagram_text;
use crate::fan::{boundary_diagram, standard_fan, DiagramEntry, Fan2D, Point};
use crate::kernel::{det_scalar, Characteristic, Scalar, Var};
use crate::limits::{elementary_limit, BoxIdeal};
use crate::orbit::{spanning_matrix_m41, GroupFamily};
use crate::staircase::{Staircase, StepSeq};
use claims::{Expectation, Side};
pub use golden::Golden;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Parameters outside the statement's range; nothing was checked.
    Range,
}

/// The first mismatch found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub what: String,
    pub computed: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub id: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    /// Number of individual comparisons made.
    pub checked: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub char: u64,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Accumulates comparisons and keeps the first failure.
struct Tally {
    checked: usize,
    witness: Option<Witness>,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, witness: None }
    }

    fn check(&mut self, what: impl FnOnce() -> String, ok: bool, computed: impl ToString, expected: impl ToString) {
        self.checked += 1;
        if ok {
            return;
        }
        let w = Witness { what: what(), computed: computed.to_string(), expected: expected.to_string() };
        if std::env::var_os("HF_DEBUG").is_some() {
            eprintln!("MISMATCH {w:?}");
        }
        self.witness.get_or_insert(w);
    }

    fn eq<T: PartialEq + std::fmt::Display>(&mut self, what: impl FnOnce() -> String, computed: &T, expected: &T) {
        self.check(what, computed == expected, computed, expected);
    }

    fn report(self, id: impl Into<String>, params: BTreeMap<String, Value>, ch: Characteristic) -> ClaimReport {
        ClaimReport {
            id: id.into(),
            params,
            status: if self.witness.is_some() { Status::Fail } else { Status::Pass },
            checked: self.checked,
            witness: self.witness,
            char: char_number(ch),
        }
    }
}

fn char_number(ch: Characteristic) -> u64 {
    if ch.is_zero() {
        0
    } else {
        ch.get()
    }
}

fn range_report(id: &str, params: BTreeMap<String, Value>, ch: Characteristic) -> ClaimReport {
    ClaimReport { id: id.into(), params, status: Status::Range, checked: 0, witness: None, char: char_number(ch) }
}

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn steps(v: &[u32]) -> Staircase {
    Staircase::from_steps(&StepSeq(v.to_vec()))
}

fn gens(ms: &[(u32, u32)]) -> Staircase {
    Staircase::from_monomials(ms).expect("finite colength")
}

/// The report of a whole run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub reports: Vec<ClaimReport>,
    pub summary: Summary,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub range: usize,
}

impl VerifyReport {
    pub fn new(reports: Vec<ClaimReport>) -> Self {
        let mut summary = Summary::default();
        for r in &reports {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Range => summary.range += 1,
            }
        }
        VerifyReport { schema_version: SCHEMA_VERSION, reports, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }
}

/// What to verify in one run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Prop33,
    Claim(u8),
    Figure1,
    Figure2,
    Cor34,
    Figure3,
}

impl std::str::FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        Ok(match t.as_str() {
            "prop33" => Target::Prop33,
            "figure1" => Target::Figure1,
            "figure2" => Target::Figure2,
            "cor34" | "cor34-properties" => Target::Cor34,
            "figure3" => Target::Figure3,
            _ => match t.strip_prefix("claim").and_then(|k| k.parse::<u8>().ok()) {
                Some(k) if (1..=8).contains(&k) => Target::Claim(k),
                _ => return Err(Error::Domain(format!("unknown verification target {s:?}"))),
            },
        })
    }
}

impl Target {
    /// The default set: everything with a desk-checkable statement about the plane fans.
    /// The three-parameter example is opt-in because it is slower.
    pub fn standard() -> Vec<Target> {
        let mut v = vec![Target::Prop33];
        v.extend((1..=8).map(Target::Claim));
        v.extend([Target::Figure1, Target::Figure2, Target::Cor34]);
        v
    }
}

/// Verifier with a cache of the fans of `(x,y⁴)^n`.
pub struct Verifier {
    ch: Characteristic,
    golden: Golden,
    fans: Mutex<BTreeMap<u32, Arc<Fan2D>>>,
}

impl Verifier {
    pub fn new(ch: Characteristic) -> Self {
        Verifier { ch, golden: Golden::from_env(), fans: Mutex::new(BTreeMap::new()) }
    }

    pub fn with_golden(ch: Characteristic, golden: Golden) -> Self {
        Verifier { ch, golden, fans: Mutex::new(BTreeMap::new()) }
    }

    pub fn characteristic(&self) -> Characteristic {
        self.ch
    }

    /// The standard fan of `(x,y⁴)^n`.
    pub fn fan(&self, n: u32) -> Result<Arc<Fan2D>> {
        if n == 0 {
            return Err(Error::Precondition("n must be positive".into()));
        }
        if let Some(f) = self.fans.lock().expect("fan cache").get(&n) {
            return Ok(f.clone());
        }
        let f = Arc::new(standard_fan(&[steps(&[4]).pow(n)], Some(GroupFamily::G41), self.ch)?);
        self.fans.lock().expect("fan cache").insert(n, f.clone());
        Ok(f)
    }

    /// Computes the fans for `1..=n` in parallel ahead of time.
    pub fn warm(&self, n: u32) -> Result<()> {
        (1..=n).into_par_iter().try_for_each(|k| self.fan(k).map(|_| ()))
    }

    fn side(&self, n: u32, side: Side, ray: Point) -> Result<Staircase> {
        let f = self.fan(n)?;
        let (plus, minus) = f.adjacent_ideals(ray)?;
        Ok(match side {
            Side::Plus => plus,
            Side::Minus => minus,
        })
    }

    fn expect(&self, t: &mut Tally, n: u32, e: &Expectation) -> Result<()> {
        let got = self.side(n, e.side, e.ray)?;
        t.eq(|| format!("I^{}({n},({},{}))", e.side, e.ray.0, e.ray.1), &got, &e.ideal);
        Ok(())
    }

    pub fn run(&self, targets: &[Target], max_n: u32) -> Result<VerifyReport> {
        self.warm(max_n)?;
        let jobs: Vec<(Target, u32)> = targets
            .iter()
            .flat_map(|t| match t {
                Target::Claim(_) | Target::Figure2 => (1..=max_n).map(|n| (t.clone(), n)).collect::<Vec<_>>(),
                _ => vec![(t.clone(), 0)],
            })
            .collect();
        let reports: Vec<Vec<ClaimReport>> = jobs
            .par_iter()
            .map(|(t, n)| -> Result<Vec<ClaimReport>> {
                Ok(match t {
                    Target::Prop33 => vec![
                        self.verify_prop33(GroupFamily::G41)?,
                        self.verify_prop33(GroupFamily::G32)?,
                        verify_prop33_char2()?,
                        self.verify_prop33_limits(GroupFamily::G41)?,
                        self.verify_prop33_limits(GroupFamily::G32)?,
                    ],
                    Target::Claim(k) => vec![self.verify_claim(*k, *n)?],
                    Target::Figure1 => vec![self.verify_figure1()?],
                    Target::Figure2 => vec![self.verify_figure2(*n)?],
                    Target::Cor34 => vec![self.verify_cor34()?],
                    Target::Figure3 => vec![self.verify_figure3()?],
                })
            })
            .collect::<Result<_>>()?;
        Ok(VerifyReport::new(reports.into_iter().flatten().collect()))
    }

    /// The hand-checkable equalities for the small test ideals of each two-parameter family.
    pub fn verify_prop33(&self, family: GroupFamily) -> Result<ClaimReport> {
        let (t, _) = self.prop33_tallies(family)?;
        Ok(t.report("prop33", params(&[("family", json!(family.to_string()))]), self.ch))
    }

    /// The statements expressing boundary ideals of the fan as limits of one-parameter
    /// subgroups, evaluated on the same test ideals.
    pub fn verify_prop33_limits(&self, family: GroupFamily) -> Result<ClaimReport> {
        let (_, l) = self.prop33_tallies(family)?;
        let p = params(&[("family", json!(family.to_string())), ("part", json!("limits"))]);
        Ok(l.report("prop33", p, self.ch))
    }

    fn prop33_tallies(&self, family: GroupFamily) -> Result<(Tally, Tally)> {
        let ch = self.ch;
        let mut t = Tally::new();
        let mut l = Tally::new();
        let fan = |i: &Staircase| standard_fan(std::slice::from_ref(i), Some(family), ch);
        let lim = |i: &Staircase, var: usize, h: &[u32]| -> Result<Staircase> {
            elementary_limit(&BoxIdeal::from_staircase(i), var, h, ch)?.to_staircase()
        };
        let x_y3 = steps(&[3]);
        match family {
            GroupFamily::G41 => {
                let x_y4 = steps(&[4]);
                let x2y2 = gens(&[(2, 0), (0, 2)]);
                let f3 = fan(&x_y3)?;
                let f4 = fan(&x_y4)?;
                let displayed: [(&Fan2D, Side, Point, &Staircase, &str); 4] = [
                    (&f3, Side::Plus, (-1, 0), &x_y3, "(x,y^3)"),
                    (&f3, Side::Minus, (0, 1), &x_y3, "(x,y^3)"),
                    (&f4, Side::Minus, (0, -1), &x2y2, "(x,y^4)"),
                    (&f4, Side::Plus, (1, 2), &x2y2, "(x,y^4)"),
                ];
                for (f, side, ray, want, name) in displayed {
                    let got = pick(f, side, ray)?;
                    t.eq(|| format!("{name}^{side}({},{})", ray.0, ray.1), &got, want);
                }
                for (f, name, i) in [(&f3, "(x,y^3)", &x_y3), (&f4, "(x,y^4)", &x_y4)] {
                    let g0t = |j: &Staircase| lim(j, 0, &[0, 3]);
                    let gt0 = |j: &Staircase| lim(j, 0, &[0, 2]);
                    let m_01 = pick(f, Side::Minus, (0, 1))?;
                    let p_10 = pick(f, Side::Plus, (-1, 0))?;
                    let p12 = pick(f, Side::Plus, (1, 2))?;
                    let m12 = pick(f, Side::Minus, (1, 2))?;
                    let m0_1 = pick(f, Side::Minus, (0, -1))?;
                    l.eq(|| format!("{name}: I^+(-1,0) = I^-(0,1)"), &p_10, &m_01);
                    l.eq(|| format!("{name}: I^-(0,1) = lim g(0,t) I"), &m_01, &g0t(i)?);
                    l.eq(|| format!("{name}: I^-(0,-1) = lim g(t,0) I"), &m0_1, &gt0(i)?);
                    l.eq(|| format!("{name}: I^+(0,1) = lim g(t,0) I^-(0,1)"), &pick(f, Side::Plus, (0, 1))?, &gt0(&m_01)?);
                    if ch.is_zero() || ch.get() != 2 {
                        l.eq(|| format!("{name}: I^-(0,-1) = I^+(1,2)"), &m0_1, &p12);
                    }
                    l.eq(|| format!("{name}: I^-(1,2) = lim g(0,t) I^+(1,2)"), &m12, &g0t(&p12)?);
                }
            }
            GroupFamily::G32 => {
                let x2_y = gens(&[(2, 0), (0, 1)]);
                let f3 = fan(&x_y3)?;
                let f2 = fan(&x2_y)?;
                let displayed: [(&Fan2D, Side, Point, &Staircase, &str); 4] = [
                    (&f3, Side::Plus, (-1, 0), &x_y3, "(x,y^3)"),
                    (&f3, Side::Minus, (0, 1), &x_y3, "(x,y^3)"),
                    (&f2, Side::Minus, (0, -1), &x2_y, "(x^2,y)"),
                    (&f2, Side::Plus, (1, 0), &x2_y, "(x^2,y)"),
                ];
                for (f, side, ray, want, name) in displayed {
                    let got = pick(f, side, ray)?;
                    t.eq(|| format!("{name}_{side}({},{})", ray.0, ray.1), &got, want);
                }
                for (f, name, i) in [(&f3, "(x,y^3)", &x_y3), (&f2, "(x^2,y)", &x2_y)] {
                    let h0t = |j: &Staircase| lim(j, 1, &[1, 0]);
                    let ht0 = |j: &Staircase| lim(j, 0, &[0, 2]);
                    let m01 = pick(f, Side::Minus, (0, 1))?;
                    let p01 = pick(f, Side::Plus, (0, 1))?;
                    let m0_1 = pick(f, Side::Minus, (0, -1))?;
                    l.eq(|| format!("{name}: I_+(-1,0) = I_-(0,1)"), &pick(f, Side::Plus, (-1, 0))?, &m01);
                    l.eq(|| format!("{name}: I_-(0,1) = lim h(0,t) I"), &m01, &h0t(i)?);
                    l.eq(|| format!("{name}: I_-(0,-1) = I_+(1,0)"), &m0_1, &pick(f, Side::Plus, (1, 0))?);
                    l.eq(|| format!("{name}: I_-(0,-1) = lim h(t,0) I"), &m0_1, &ht0(i)?);
                    l.eq(|| format!("{name}: I_+(0,1) = lim h(t,0) I_-(0,1)"), &p01, &ht0(&m01)?);
                    l.eq(|| format!("{name}: I_-(0,1) = lim h(0,t) I_+(0,1)"), &m01, &h0t(&p01)?);
                }
            }
            GroupFamily::G51 => return Err(Error::Precondition("no plane fan for g51".into())),
        }
        Ok((t, l))
    }

    /// Claim `k` for `(x,y⁴)^n`; claims 5 and 6 run over their whole `k` range.
    pub fn verify_claim(&self, claim: u8, n: u32) -> Result<ClaimReport> {
        let id = format!("claim{claim}");
        let p = params(&[("n", json!(n))]);
        if n == 0 {
            return Ok(range_report(&id, p, self.ch));
        }
        let mut t = Tally::new();
        match claim {
            1 | 2 => {
                let es = if claim == 1 { claims::claim1(n) } else { claims::claim2(n) };
                for e in &es {
                    self.expect(&mut t, n, e)?;
                }
                // Products of limits lie in limits of products; equal colength forces equality.
                if n >= 2 {
                    for e in &es {
                        let prod = self.side(n - 1, e.side, e.ray)?.multiply(&self.side(1, e.side, e.ray)?);
                        let got = self.side(n, e.side, e.ray)?;
                        t.check(
                            || format!("I^{}({},.) I^{}(1,.) inside I^{}({n},.)", e.side, n - 1, e.side, e.side),
                            prod.leq(&got),
                            &got,
                            &prod,
                        );
                    }
                }
            }
            3 => {
                let (es, product) = claims::claim3(n);
                for e in &es {
                    self.expect(&mut t, n, e)?;
                }
                t.eq(|| "step form against product form".into(), &es[0].ideal, &product);
            }
            4 => {
                let es = claims::claim4(n);
                for e in &es {
                    self.expect(&mut t, n, e)?;
                }
                if n >= 4 {
                    let p = |m| self.side(m, Side::Plus, (0, 1));
                    let sum = p(n - 2)?.multiply(&p(2)?).add(&p(n - 3)?.multiply(&p(3)?));
                    t.eq(
                        || format!("I^+({n},(0,1)) = I^+({},(0,1)) I^+(2,(0,1)) + I^+({},(0,1)) I^+(3,(0,1))", n - 2, n - 3),
                        &p(n)?,
                        &sum,
                    );
                }
            }
            5 | 6 => {
                let range = if claim == 5 { claims::claim5_range(n) } else { claims::claim6_range(n) };
                if range.is_empty() {
                    return Ok(range_report(&id, p, self.ch));
                }
                for k in range {
                    let es = if claim == 5 { claims::claim5(n, k) } else { claims::claim6(n, k) };
                    for e in es.expect("k in range") {
                        self.expect(&mut t, n, &e)?;
                    }
                }
            }
            7 | 8 => {
                let es = if claim == 7 { claims::claim7(n) } else { claims::claim8(n) };
                for e in &es {
                    self.expect(&mut t, n, e)?;
                }
            }
            _ => return Err(Error::Domain(format!("there is no claim {claim}"))),
        }
        Ok(t.report(id, p, self.ch))
    }

    /// Boundary diagram of `(x,y⁴)^n` against the transcribed golden diagram.
    pub fn verify_figure2(&self, n: u32) -> Result<ClaimReport> {
        let id = format!("figure2-{n}");
        let p = params(&[("n", json!(n))]);
        let Some(golden) = self.golden.figure2(n)? else {
            return Ok(range_report(&id, p, self.ch));
        };
        let computed = boundary_diagram(&*self.fan(n)?)?.entries;
        let expected = golden.entries();
        let mut t = Tally::new();
        let len = computed.len().max(expected.len());
        for k in 0..len {
            let (c, e) = (computed.get(k), expected.get(k));
            t.check(|| format!("entry {k}"), c == e, show_entry(c), show_entry(e));
        }
        if t.witness.is_some() {
            t.witness = t.witness.map(|w| Witness {
                what: format!("{}; diagram {}", w.what, diagram_text(&computed)),
                ..w
            });
        }
        Ok(t.report(id, p, self.ch))
    }

    /// The minor of `M_3` on the columns of `I(1,1,1,2,1,1)`, at `a = b = 1`, against the
    /// transcribed matrix up to row and column permutations.
    pub fn verify_figure1(&self) -> Result<ClaimReport> {
        let ch = Characteristic::ZERO;
        let mut t = Tally::new();
        let m = spanning_matrix_m41(3, ch)?;
        t.eq(|| "M_3 shape".into(), &format!("{}x{}", m.nrows(), m.ncols()), &"18x30".to_string());
        let ideal = steps(&[1, 1, 1, 2, 1, 1]);
        let labels = m.column_labels().expect("labelled columns");
        let cols: Vec<usize> = (0..labels.len()).filter(|&k| ideal.contains(labels[k].0, labels[k].1)).collect();
        let minor = m.select_columns(&cols).map(|p| p.evaluate_at_one(&[Var::A, Var::B]));
        let generated: Vec<Vec<i64>> = minor
            .to_scalar_rows()
            .ok_or_else(|| Error::Invariant("minor still has parameters".into()))?
            .iter()
            .map(|r| r.iter().map(scalar_i64).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        let golden = self.golden.figure1()?;
        t.eq(
            || "minor shape".into(),
            &format!("{}x{}", generated.len(), generated.first().map_or(0, Vec::len)),
            &format!("{}x{}", golden.rows.len(), golden.rows.first().map_or(0, Vec::len)),
        );
        let det = |rows: &[Vec<i64>]| -> Result<Scalar> {
            let s: Vec<Vec<Scalar>> =
                rows.iter().map(|r| r.iter().map(|&v| Scalar::from_i64(ch, v)).collect()).collect();
            Ok(det_scalar(&s, ch)?)
        };
        let abs = |s: Scalar| if s.is_negative() { s.neg() } else { s };
        let (dg, dt) = (abs(det(&generated)?), abs(det(&golden.rows)?));
        t.eq(|| "|det|".into(), &dg, &dt);
        let equivalent = perm::permutation_equivalence(&golden.rows, &generated).is_some();
        t.check(|| "permutation equivalence".into(), equivalent, "no row/column matching", "a row/column matching");
        Ok(t.report("figure1", params(&[("m", json!(3))]), ch))
    }

    /// Smoothness, completeness and boundary self-intersections of the fan of
    /// `F((x,y³),(x²,xy,y⁵))`.
    pub fn verify_cor34(&self) -> Result<ClaimReport> {
        let ch = self.ch;
        let mut t = Tally::new();
        let f = standard_fan(&[steps(&[3]), gens(&[(2, 0), (1, 1), (0, 5)])], None, ch)?;
        let complete = f.rays.len() >= 3
            && (0..f.rays.len()).all(|i| crate::fan::geometry::cross(f.rays[i], f.rays[(i + 1) % f.rays.len()]) > 0);
        t.check(|| "complete".into(), complete, format!("{:?}", f.rays), "consecutive rays turning by less than pi");
        t.check(|| "smooth".into(), f.is_smooth(), format!("{:?}", f.rays), "unimodular consecutive rays");
        if f.is_smooth() {
            let si = f.self_intersections()?;
            let boundary: std::collections::BTreeSet<i64> =
                si.iter().filter(|(r, _)| **r != (-1, 0) && **r != (0, -1)).map(|(_, v)| *v).collect();
            let want: std::collections::BTreeSet<i64> = [0, -3].into_iter().collect();
            t.check(|| "boundary self-intersections".into(), boundary == want, format!("{boundary:?}"), format!("{want:?}"));
        }
        Ok(t.report("cor34-properties", BTreeMap::new(), ch))
    }

    /// The three-parameter example: two sporadic generators matching the stated polynomials up
    /// to scalar, and eight facets of the support hull.
    pub fn verify_figure3(&self) -> Result<ClaimReport> {
        use crate::kernel::MultiPoly;
        use crate::segre3::{coordinate_span, example_factors, hull3_faces, support_picture};
        let ch = Characteristic::ZERO;
        let mut t = Tally::new();
        let span = coordinate_span(&example_factors(), ch)?;
        let pic = support_picture(&span)?;
        let stated: Vec<MultiPoly> = ["a^5*(a*c - b^2)*(a*c - 2*b^2)", "a^2*b*(a*c - b^2)*(a*c - 2*b^2)"]
            .iter()
            .map(|s| {
                let mut p = MultiPoly::parse(ch, s)?;
                p.make_primitive();
                Ok(p)
            })
            .collect::<Result<_>>()?;
        t.eq(|| "number of sporadic generators".into(), &pic.sporadic.len(), &stated.len());
        let mut got: Vec<String> = pic.sporadic.iter().map(|p| p.to_string()).collect();
        let mut want: Vec<String> = stated.iter().map(|p| p.to_string()).collect();
        got.sort();
        want.sort();
        t.eq(|| "sporadic generators up to scalar".into(), &got.join("; "), &want.join("; "));
        let facets = hull3_faces(&pic.points.iter().copied().collect::<Vec<_>>())?.len();
        t.eq(|| "facets of the support hull".into(), &facets, &8);
        Ok(t.report("figure3", BTreeMap::new(), ch))
    }
}

fn pick(f: &Fan2D, side: Side, ray: Point) -> Result<Staircase> {
    let (p, m) = f.adjacent_ideals(ray)?;
    Ok(if side == Side::Plus { p } else { m })
}

fn show_entry(e: Option<&DiagramEntry>) -> String {
    match e {
        None => "nothing".into(),
        Some(e) => diagram_text(std::slice::from_ref(e)),
    }
}

fn scalar_i64(s: &Scalar) -> Result<i64> {
    use num_traits::ToPrimitive;
    s.to_bigint()
        .and_then(|b| b.to_i64())
        .ok_or_else(|| Error::Invariant(format!("entry {s} is not a small integer")))
}

/// `I^+(1,(-1,0)) = I^-(1,(1,2)) = I(1,2)` for `(x,y⁴)` in characteristic 2.
pub fn verify_prop33_char2() -> Result<ClaimReport> {
    let ch = Characteristic::new(2)?;
    let f = standard_fan(&[steps(&[4])], Some(GroupFamily::G41), ch)?;
    let mut t = Tally::new();
    let want = steps(&[1, 2]);
    t.eq(|| "(x,y^4)^+(-1,0)".into(), &pick(&f, Side::Plus, (-1, 0))?, &want);
    t.eq(|| "(x,y^4)^-(1,2)".into(), &pick(&f, Side::Minus, (1, 2))?, &want);
    Ok(t.report("prop33", params(&[("family", json!("g41")), ("subset", json!("char2"))]), ch))
}
