//! Exhaustive exact checks of `T(mn) = T(m)T(n) + T(m-1)T(n-1)`.

use crate::exactalg::{Poly, Rational};
use crate::seqengine::{family_value, residual_numerator, FamilyId, SeqError, SymbolicTable};
use num_traits::Zero;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("c = {0} is a pole of d(c)")]
    Pole(Rational),
    #[error(transparent)]
    Seq(#[from] SeqError),
}

pub(crate) fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}

/// A grid point where the two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub m: u64,
    pub n: u64,
    #[serde(serialize_with = "ser_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub subject: String,
    pub range: u64,
    pub checked: u64,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the rule for `family` at every `1 <= m, n <= max_mn`.
pub fn verify_family(family: FamilyId, max_mn: u64) -> VerifyReport {
    let values: Vec<Rational> = (0..=max_mn * max_mn)
        .map(|k| family_value(family, k))
        .collect();
    let mut failures = Vec::new();
    for m in 1..=max_mn {
        let (tm, tm1) = (&values[m as usize], &values[m as usize - 1]);
        for n in 1..=max_mn {
            let lhs = &values[(m * n) as usize];
            let rhs = tm * &values[n as usize] + tm1 * &values[n as usize - 1];
            if *lhs != rhs {
                failures.push(Failure {
                    m,
                    n,
                    lhs: lhs.clone(),
                    rhs,
                });
            }
        }
    }
    VerifyReport {
        subject: family.name().to_string(),
        range: max_mn,
        checked: max_mn * max_mn,
        failures,
    }
}

fn ensure_regular(table: &SymbolicTable, c0: &Rational) -> Result<(), VerifyError> {
    if table.d().eval(c0).is_none() {
        return Err(VerifyError::Pole(c0.clone()));
    }
    Ok(())
}

/// Compares the symbolic sequence specialised at `c = c0` with `family` for
/// `0 <= n <= max_n`. Failures record `(n, n)` as the index pair with the
/// specialised value on the left.
pub fn crosscheck_specialization(
    table: &mut SymbolicTable,
    c0: &Rational,
    family: FamilyId,
    max_n: u64,
) -> Result<VerifyReport, VerifyError> {
    ensure_regular(table, c0)?;
    let mut failures = Vec::new();
    for n in 0..=max_n {
        let lhs = table
            .get(n)?
            .eval(c0)
            .ok_or_else(|| VerifyError::Pole(c0.clone()))?;
        let rhs = family_value(family, n);
        if lhs != rhs {
            failures.push(Failure { m: n, n, lhs, rhs });
        }
    }
    Ok(VerifyReport {
        subject: format!("c={c0} vs {family}"),
        range: max_n,
        checked: max_n + 1,
        failures,
    })
}

/// A probe whose constraint numerator does not vanish at the candidate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanEntry {
    pub m: u64,
    pub n: u64,
    #[serde(serialize_with = "ser_rational")]
    pub residual: Rational,
}

/// Probe pairs `3 <= m <= n` with `mn <= max_prod`, in lexicographic order.
pub fn probe_pairs(max_prod: u64) -> Vec<(u64, u64)> {
    (3..)
        .take_while(|m| m * m <= max_prod)
        .flat_map(|m| (m..=max_prod / m).map(move |n| (m, n)))
        .collect()
}

/// Evaluates every probe's constraint numerator at `c0` and keeps the nonzero ones.
pub fn scan_candidate(
    table: &mut SymbolicTable,
    c0: &Rational,
    max_prod: u64,
) -> Result<Vec<ScanEntry>, VerifyError> {
    ensure_regular(table, c0)?;
    let mut out = Vec::new();
    for (m, n) in probe_pairs(max_prod) {
        let num: Poly = residual_numerator(table, m, n)?;
        let residual = num.eval(c0);
        if !residual.is_zero() {
            out.push(ScanEntry { m, n, residual });
        }
    }
    Ok(out)
}
