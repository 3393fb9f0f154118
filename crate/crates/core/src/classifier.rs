//! Completeness analysis: every sequence obeying the product rule is one of
//! the five families.
//!
//! With `a = T(0)`, `b = T(1)`:
//!
//! * `(m, n) = (1, 1)` gives `b = b^2 + a^2`;
//! * `m = 1` gives `T(n) = b T(n) + a T(n-1)`.
//!
//! So either `a != 0` (the constant `1/2`), or `a = 0` and `b in {0, 1}`. The
//! case `a = 0, b = 1` leaves `c = T(2)` free, and the remaining product-rule
//! instances become polynomial constraints on `c`.

use crate::exactalg::{extract_rational_roots, Poly, RatFunc, Rational, RationalRoot};
use crate::seqengine::{derive_d, residual_numerator, FamilyId, SeqError, SymbolicTable};
use crate::veritool::{ser_rational, verify_family};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Default probes: the `T(9)` and `T(15)` instances.
pub const DEFAULT_PROBES: [(u64, u64); 2] = [(3, 3), (3, 5)];

/// Range used to brute-force certify the closed branches.
pub const DEFAULT_CERTIFY_RANGE: u64 = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("no probe pairs given")]
    NoProbes,
    #[error("every probe residual vanishes identically; add a pair with both components >= 3")]
    AllResidualsZero,
    #[error(transparent)]
    Seq(#[from] SeqError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    #[serde(rename = "A_nonzero")]
    ANonzero,
    #[serde(rename = "A0_B0")]
    A0B0,
    #[serde(rename = "A0_B1")]
    A0B1,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::ANonzero => "A_nonzero",
            Branch::A0B0 => "A0_B0",
            Branch::A0B1 => "A0_B1",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchRecord {
    pub branch: Branch,
    pub conclusion: String,
    /// Families the branch closes on; empty when the branch is deferred.
    pub families: Vec<FamilyId>,
    pub justification: Vec<String>,
    /// Outcome of brute-force verification of `families`, when run.
    pub certified: Option<bool>,
}

/// The three exhaustive cases on `(T(0), T(1))`.
pub fn branch_analysis() -> Vec<BranchRecord> {
    let steps = |s: &[&str]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    vec![
        BranchRecord {
            branch: Branch::ANonzero,
            conclusion: "T(n) = 1/2 for all n".into(),
            families: vec![FamilyId::Half],
            justification: steps(&[
                "(1,1): b = b^2 + a^2, so a != 0 forces b != 1",
                "m = 1: (1 - b) T(n) = a T(n-1), so T(n) = a r^n with r = b/a",
                "m = 2: r^n = a (r^2 + 1) for all n, so r = 1",
                "a = b and b = b^2 + a^2 give a = 1/2",
            ]),
            certified: None,
        },
        BranchRecord {
            branch: Branch::A0B0,
            conclusion: "T(n) = 0 for all n".into(),
            families: vec![FamilyId::Zero],
            justification: steps(&["m = 1: T(n) = b T(n) + a T(n-1) = 0"]),
            certified: None,
        },
        BranchRecord {
            branch: Branch::A0B1,
            conclusion: "deferred: T(n) is determined by c = T(2); solve for c".into(),
            families: Vec::new(),
            justification: steps(&[
                "m = 2: T(2n) = c T(n) + T(n-1)",
                "two expansions of T(4n): T(2n-1) = T(n) + (d - c) T(n-1)",
                "two expansions of T(18): d = (3c^3 + c)/(c^2 + 2c - 1)",
            ]),
            certified: None,
        },
    ]
}

/// Runs the exhaustive verifier on every closed branch.
pub fn certify_branches(branches: &mut [BranchRecord], range: u64) {
    for record in branches.iter_mut().filter(|r| !r.families.is_empty()) {
        record.certified = Some(
            record
                .families
                .iter()
                .all(|f| verify_family(*f, range).passed()),
        );
    }
}

/// One probe instance and the rational part of its constraint polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintRecord {
    pub m: u64,
    pub n: u64,
    pub numerator: Poly,
    pub roots: Vec<RationalRoot>,
    /// Numerator with all rational roots deflated out; `0` when the residual vanishes.
    pub cofactor: Poly,
}

impl ConstraintRecord {
    pub fn new(m: u64, n: u64, numerator: Poly) -> Self {
        let (roots, cofactor) = match extract_rational_roots(&numerator) {
            Ok(f) => (f.roots, f.cofactor),
            Err(_) => (Vec::new(), Poly::zero()),
        };
        ConstraintRecord {
            m,
            n,
            numerator,
            roots,
            cofactor,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.numerator.is_zero()
    }
}

/// Full result of the completeness analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub branches: Vec<BranchRecord>,
    pub d_formula: RatFunc,
    pub constraints: Vec<ConstraintRecord>,
    /// Monic gcd of the nonzero probe numerators.
    pub probe_gcd: Poly,
    /// What is left of `probe_gcd` after deflating its rational roots.
    pub gcd_cofactor: Poly,
    pub surviving_c: Vec<Rational>,
    pub family_map: Vec<(Rational, Option<FamilyId>)>,
    /// `gcd_cofactor` is constant, so `surviving_c` is the complete common root set.
    pub residual_cofactor_check: bool,
    /// The non-shared parts of the `(3,3)` and `(3,5)` numerators are coprime.
    pub cofactor_gcd_check: Option<bool>,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    /// Every check that was run passed and the surviving values map onto families.
    pub fn passed(&self) -> bool {
        self.residual_cofactor_check
            && self.cofactor_gcd_check.unwrap_or(true)
            && self.branches.iter().all(|b| b.certified != Some(false))
            && self.family_map.iter().all(|(_, f)| f.is_some())
    }
}

/// Intersects the probe constraints and reads off the admissible `c`.
pub fn solve_c(
    table: &mut SymbolicTable,
    probes: &[(u64, u64)],
) -> Result<ClassificationReport, ClassifyError> {
    if probes.is_empty() {
        return Err(ClassifyError::NoProbes);
    }
    let mut constraints = Vec::with_capacity(probes.len());
    for &(m, n) in probes {
        constraints.push(ConstraintRecord::new(
            m,
            n,
            residual_numerator(table, m, n)?,
        ));
    }
    let probe_gcd = constraints
        .iter()
        .filter(|c| !c.is_trivial())
        .map(|c| c.numerator.clone())
        .reduce(|g, f| Poly::gcd(&g, &f).expect("nonzero operands"))
        .ok_or(ClassifyError::AllResidualsZero)?
        .monic();
    let common = extract_rational_roots(&probe_gcd).expect("gcd of nonzero polynomials");
    let surviving_c: Vec<Rational> = common.roots.iter().map(|r| r.root.clone()).collect();
    let family_map = surviving_c
        .iter()
        .map(|c| (c.clone(), FamilyId::from_c(c)))
        .collect();
    Ok(ClassificationReport {
        branches: branch_analysis(),
        d_formula: table.d().clone(),
        constraints,
        residual_cofactor_check: common.cofactor.is_constant(),
        gcd_cofactor: common.cofactor,
        probe_gcd,
        surviving_c,
        family_map,
        cofactor_gcd_check: None,
        notes: vec![
            "period3 takes the value 1 exactly at n = 3k + 1; reading it as T(3k) = 1 \
             breaks the rule already at (m, n) = (1, 1)"
                .into(),
        ],
    })
}

/// True iff the parts of the `(3,3)` and `(3,5)` numerators outside their
/// common factor share no factor of positive degree.
pub fn cofactor_gcd_check(table: &mut SymbolicTable) -> Result<bool, ClassifyError> {
    let f = residual_numerator(table, 3, 3)?;
    let g = residual_numerator(table, 3, 5)?;
    let common = Poly::gcd(&f, &g).map_err(|_| ClassifyError::AllResidualsZero)?;
    let (fc, _) = f.divrem(&common).expect("gcd is nonzero");
    let (gc, _) = g.divrem(&common).expect("gcd is nonzero");
    let cross = Poly::gcd(&fc, &gc).map_err(|_| ClassifyError::AllResidualsZero)?;
    Ok(cross.is_constant())
}

/// Branch analysis, brute-force certification, constraint solving and the
/// cross-cofactor certificate in one report.
pub fn classify(
    table: &mut SymbolicTable,
    probes: &[(u64, u64)],
    certify_range: u64,
) -> Result<ClassificationReport, ClassifyError> {
    let derived = derive_d()?;
    if derived != *table.d() {
        return Err(SeqError::Structural(format!(
            "table seeded with T(3) = {}, derivation gives {derived}",
            table.d()
        ))
        .into());
    }
    let mut report = solve_c(table, probes)?;
    certify_branches(&mut report.branches, certify_range);
    report.cofactor_gcd_check = Some(cofactor_gcd_check(table)?);
    Ok(report)
}

#[derive(Serialize)]
struct RootJson<'a> {
    #[serde(serialize_with = "ser_rational")]
    root: &'a Rational,
    multiplicity: u32,
    factor: String,
}

#[derive(Serialize)]
struct ConstraintJson<'a> {
    m: u64,
    n: u64,
    numerator: String,
    roots: Vec<RootJson<'a>>,
    cofactor: String,
}

#[derive(Serialize)]
struct CofactorJson {
    probe_gcd: String,
    gcd_cofactor: String,
    residual_cofactor_check: bool,
    cofactor_gcd_check: Option<bool>,
}

pub(crate) fn root_factor(r: &RationalRoot) -> String {
    let linear = Poly::linear(&r.root);
    if r.multiplicity == 1 {
        linear.to_string()
    } else {
        format!("({linear})^{}", r.multiplicity)
    }
}

impl<'a> From<&'a ConstraintRecord> for ConstraintJson<'a> {
    fn from(c: &'a ConstraintRecord) -> Self {
        ConstraintJson {
            m: c.m,
            n: c.n,
            numerator: c.numerator.to_string(),
            roots: c
                .roots
                .iter()
                .map(|r| RootJson {
                    root: &r.root,
                    multiplicity: r.multiplicity,
                    factor: root_factor(r),
                })
                .collect(),
            cofactor: c.cofactor.to_string(),
        }
    }
}

impl Serialize for ConstraintRecord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ConstraintJson::from(self).serialize(s)
    }
}

impl Serialize for ClassificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let surviving: Vec<String> = self.surviving_c.iter().map(|c| c.to_string()).collect();
        let family_map: Vec<(String, Option<FamilyId>)> = self
            .family_map
            .iter()
            .map(|(c, f)| (c.to_string(), *f))
            .collect();
        let family_map: serde_json::Map<String, serde_json::Value> = family_map
            .into_iter()
            .map(|(c, f)| (c, serde_json::to_value(f).expect("family serializes")))
            .collect();
        let mut map = s.serialize_map(Some(8))?;
        map.serialize_entry("branches", &self.branches)?;
        map.serialize_entry("d", &self.d_formula.to_string())?;
        map.serialize_entry("constraints", &self.constraints)?;
        map.serialize_entry("surviving_c", &surviving)?;
        map.serialize_entry("family_map", &family_map)?;
        map.serialize_entry(
            "cofactor_check",
            &CofactorJson {
                probe_gcd: self.probe_gcd.to_string(),
                gcd_cofactor: self.gcd_cofactor.to_string(),
                residual_cofactor_check: self.residual_cofactor_check,
                cofactor_gcd_check: self.cofactor_gcd_check,
            },
        )?;
        map.serialize_entry("passed", &self.passed())?;
        map.serialize_entry("notes", &self.notes)?;
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    #[test]
    fn three_exclusive_branches() {
        let b = branch_analysis();
        assert_eq!(b.len(), 3);
        assert_eq!(b[0].branch, Branch::ANonzero);
        assert_eq!(b[0].families, vec![FamilyId::Half]);
        assert_eq!(b[1].branch, Branch::A0B0);
        assert_eq!(b[1].families, vec![FamilyId::Zero]);
        assert_eq!(b[2].branch, Branch::A0B1);
        assert!(b[2].families.is_empty());
    }

    #[test]
    fn branch_equation_cases() {
        // b = b^2 + a^2 with a = 0 admits exactly b in {0, 1}; with a = b it forces 1/2.
        let f = Poly::from_ints(&[0, -1, 1]); // b^2 - b
        let roots: Vec<Rational> = crate::exactalg::rational_roots(&f)
            .unwrap()
            .into_iter()
            .map(|r| r.root)
            .collect();
        assert_eq!(roots, vec![int(0), int(1)]);
        let g = Poly::from_ints(&[0, -1, 2]); // 2a^2 - a
        let roots: Vec<Rational> = crate::exactalg::rational_roots(&g)
            .unwrap()
            .into_iter()
            .map(|r| r.root)
            .collect();
        assert_eq!(roots, vec![int(0), crate::exactalg::ratio(1, 2)]);
    }

    #[test]
    fn default_probes_give_three_values() {
        let mut t = SymbolicTable::new();
        let report = classify(&mut t, &DEFAULT_PROBES, 50).unwrap();
        assert_eq!(report.surviving_c, vec![int(0), int(1), int(3)]);
        assert!(report.residual_cofactor_check);
        assert_eq!(report.cofactor_gcd_check, Some(true));
        assert_eq!(report.probe_gcd, Poly::from_ints(&[0, 3, -4, 1]));
        assert_eq!(
            report.family_map,
            vec![
                (int(0), Some(FamilyId::Period3)),
                (int(1), Some(FamilyId::CeilHalf)),
                (int(3), Some(FamilyId::Triangular)),
            ]
        );
        assert!(report.branches[..2]
            .iter()
            .all(|b| b.certified == Some(true)));
        assert!(report.passed());
    }

    #[test]
    fn single_probe_is_insufficient() {
        let mut t = SymbolicTable::new();
        let report = solve_c(&mut t, &[(3, 3)]).unwrap();
        assert_eq!(report.surviving_c, vec![int(-1), int(0), int(1), int(3)]);
        assert!(!report.residual_cofactor_check);
        assert_eq!(report.gcd_cofactor, Poly::from_ints(&[-1, 1, 0, 2]).monic());
        assert_eq!(report.family_map[0], (int(-1), None));
        assert!(!report.passed());
    }

    #[test]
    fn trivial_probes_are_rejected() {
        let mut t = SymbolicTable::new();
        assert_eq!(
            solve_c(&mut t, &[(2, 2)]),
            Err(ClassifyError::AllResidualsZero)
        );
        assert_eq!(
            solve_c(&mut t, &[(2, 7), (3, 4)]),
            Err(ClassifyError::AllResidualsZero)
        );
        assert_eq!(solve_c(&mut t, &[]), Err(ClassifyError::NoProbes));
    }

    #[test]
    fn larger_probe_set_is_stable() {
        let mut t = SymbolicTable::new();
        let probes = crate::veritool::probe_pairs(40);
        let report = solve_c(&mut t, &probes).unwrap();
        assert_eq!(report.surviving_c, vec![int(0), int(1), int(3)]);
        assert!(report.residual_cofactor_check);
    }

    #[test]
    fn cross_cofactors_are_coprime() {
        let mut t = SymbolicTable::new();
        assert!(cofactor_gcd_check(&mut t).unwrap());
        let cross = Poly::gcd(
            &(&Poly::from_ints(&[1, 1]) * &Poly::from_ints(&[-1, 1, 0, 2])),
            &Poly::from_ints(&[1, -3, 4, -4, 7, -1, 8]),
        )
        .unwrap();
        assert_eq!(cross, Poly::one());
        let f = Poly::from_ints(&[1, 1]);
        assert_eq!(Poly::gcd(&f, &f).unwrap(), f);
    }

    #[test]
    fn classify_rejects_a_mis_seeded_table() {
        let mut t = SymbolicTable::with_d(RatFunc::var(), 64);
        assert!(matches!(
            classify(&mut t, &DEFAULT_PROBES, 5),
            Err(ClassifyError::Seq(SeqError::Structural(_)))
        ));
    }

    #[test]
    fn json_shape() {
        let mut t = SymbolicTable::new();
        let report = classify(&mut t, &DEFAULT_PROBES, 10).unwrap();
        let v = serde_json::to_value(&report).unwrap();
        for key in [
            "branches",
            "d",
            "constraints",
            "surviving_c",
            "family_map",
            "cofactor_check",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["d"], "(3c^3 + c)/(c^2 + 2c - 1)");
        assert_eq!(v["surviving_c"], serde_json::json!(["0", "1", "3"]));
        assert_eq!(v["family_map"]["3"], "triangular");
        assert_eq!(v["branches"][0]["branch"], "A_nonzero");
        assert_eq!(v["constraints"][0]["cofactor"], "2c^3 + c - 1");
    }
}
