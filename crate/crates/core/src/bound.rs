//! Upper bound `s` on the essential dimension of a nonabelian simple group.
//!
//! `f` is the smallest degree of a faithful irreducible representation of the
//! group or of one of its verified covers. If the minimum is attained by a real
//! representation of the group itself, the group embeds in an orthogonal group
//! in `f` variables and `s = f - 2`; otherwise it acts by projective
//! substitutions in `f - 1` variables and `s = f - 1`.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::catalog::{Catalog, CatalogError, CoverOptions, CoverSearch};
use crate::character::{CharacterTable, RealityType, TABLE_SEED};
use crate::element::Ambient;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub const REPORT_SCHEMA: &str = "edbound.bound/1";

pub const FRAMING: &str = "s is an UPPER bound on the true degree of transcendence (essential dimension): \
the number of parameters to which a general equation with this group can be reduced";
pub const EXCEPTIONS_CAVEAT: &str = "the orthogonal and projective constructions realize s for the \
simple types up to a finite number of exceptions";
pub const INCOMPLETE_CAVEAT: &str = "the catalog may lack covers of this group; a missing cover can \
only make f (and s) too large, never invalidate s as an upper bound";
pub const REAL_COVER_NOTE: &str = "the minimal f comes from a real representation of a proper cover; \
only a projective embedding of the group follows, so the projective branch s = f - 1 is used";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// `s = f - 1`
    Projective,
    /// `s = f - 2`
    Orthogonal,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Projective => "projective",
            Branch::Orthogonal => "orthogonal",
        })
    }
}

/// One group whose faithful degrees were consulted: the base group or a cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSummary {
    pub name: String,
    pub is_self: bool,
    pub order: u64,
    pub multiplier: u64,
    pub verified: bool,
    /// Failed checks for rejected entries.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failed_checks: Vec<String>,
    pub f: Option<u64>,
    pub reality: Option<RealityType>,
    /// Modular prime of the character table computation.
    pub prime: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingNote {
    pub n: u64,
    /// `n - 3` for `n >= 8`.
    pub expected_s: Option<u64>,
    pub consistent: Option<bool>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub schema: String,
    pub seed: u64,
    pub group: String,
    pub order: u64,
    pub simple: bool,
    /// False in degrees-only mode, where simplicity is taken from the input.
    pub simple_verified: bool,
    pub covers: Vec<CoverSummary>,
    pub f: u64,
    pub source: String,
    pub source_is_group: bool,
    pub reality: RealityType,
    pub branch: Branch,
    pub s: u64,
    pub bound: String,
    pub complete: bool,
    pub caveats: Vec<String>,
    pub notes: Vec<String>,
    pub alternating: Option<AlternatingNote>,
    pub framing: String,
}

impl BoundReport {
    /// The structural invariants every emitted report satisfies.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        if self.branch == Branch::Orthogonal && !(self.reality == RealityType::Real && self.source_is_group) {
            return Err("orthogonal branch needs a real representation of the group itself".into());
        }
        let expected = match self.branch {
            Branch::Orthogonal => self.f.checked_sub(2),
            Branch::Projective => self.f.checked_sub(1),
        };
        if expected != Some(self.s) {
            return Err(format!("s = {} does not follow from f = {} on the {} branch", self.s, self.f, self.branch));
        }
        if self.simple && self.f < 2 {
            return Err("a nonabelian simple group has no faithful representation of degree 1".into());
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let simple = match (self.simple, self.simple_verified) {
            (true, true) => "yes (verified)",
            (true, false) => "yes (asserted by input)",
            (false, _) => "no",
        };
        writeln!(f, "group {} of order {}, simple: {simple}", self.group, self.order)?;
        writeln!(f, "groups consulted:")?;
        for c in &self.covers {
            let fv = c.f.map_or("-".to_owned(), |v| v.to_string());
            let re = c.reality.map_or("-".to_owned(), |r| r.to_string());
            let status = if c.verified { "verified".to_owned() } else { format!("rejected ({})", c.failed_checks.join(", ")) };
            let role = if c.is_self { "group".to_owned() } else { format!("cover, |M| = {}", c.multiplier) };
            writeln!(f, "  {:<10} {:<16} order {:<7} f = {fv:<3} {re:<12} {status}", c.name, role, c.order)?;
        }
        writeln!(f, "smallest faithful degree f = {} from {} ({})", self.f, self.source, self.reality)?;
        let rule = match self.branch {
            Branch::Orthogonal => "f - 2",
            Branch::Projective => "f - 1",
        };
        writeln!(f, "branch {}: s = {rule} = {}", self.branch, self.s)?;
        writeln!(f, "{}", self.framing)?;
        if let Some(a) = &self.alternating {
            writeln!(f, "alternating group of degree {}: {}", a.n, a.note)?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        for c in &self.caveats {
            writeln!(f, "caveat: {c}")?;
        }
        Ok(())
    }
}

/// `s = n - 3` for the alternating group of degree `n >= 8`.
pub fn alternating_check(n: u64) -> Result<u64> {
    if n < 8 {
        return Err(Error::Precondition(format!("the n - 3 rule is only asserted for n >= 8 (got {n})")));
    }
    Ok(n - 3)
}

/// Degree of the alternating group if `g` is one in its natural action.
pub fn alternating_degree(g: &FiniteGroup) -> Option<u64> {
    let Ambient::Perm { degree } = g.ambient() else {
        return None;
    };
    let n = degree as u64;
    // a subgroup of index 2 in S_n is A_n
    let half_factorial = (3..=n).try_fold(1u64, |acc, k| acc.checked_mul(k))?;
    (n >= 5 && g.order() as u64 == half_factorial).then_some(n)
}

fn alternating_note(n: u64, s: u64) -> AlternatingNote {
    match alternating_check(n) {
        Ok(expected) => AlternatingNote {
            n,
            expected_s: Some(expected),
            consistent: Some(expected == s),
            note: if expected == s {
                format!("s = n - 3 = {expected} as expected for n >= 8")
            } else {
                format!("s = {s} differs from the expected n - 3 = {expected}")
            },
        },
        Err(_) => AlternatingNote {
            n,
            expected_s: None,
            consistent: None,
            note: "the n - 3 rule is not asserted below n = 8".into(),
        },
    }
}

/// Picks the minimizing candidate: smallest f, then a real representation of
/// the group itself, then catalog order.
fn select(group: &str, order: u64, simple: (bool, bool), candidates: Vec<CoverSummary>, complete: bool) -> Result<BoundReport> {
    let usable: Vec<&CoverSummary> = candidates
        .iter()
        .filter(|c| c.verified && c.f.is_some())
        .collect();
    let best = usable
        .iter()
        .min_by_key(|c| {
            let orthogonal = c.is_self && c.reality == Some(RealityType::Real);
            (c.f.expect("filtered"), !orthogonal)
        })
        .ok_or_else(|| Error::Precondition("no faithful irreducible found in any consulted group".into()))?;
    let f = best.f.expect("filtered");
    let reality = best.reality.expect("set with f");
    let branch = if best.is_self && reality == RealityType::Real { Branch::Orthogonal } else { Branch::Projective };
    let s = match branch {
        Branch::Orthogonal => f - 2,
        Branch::Projective => f - 1,
    };
    let mut notes = Vec::new();
    if !best.is_self && reality == RealityType::Real {
        notes.push(REAL_COVER_NOTE.to_owned());
    }
    let mut caveats = vec![EXCEPTIONS_CAVEAT.to_owned()];
    if !complete {
        caveats.push(INCOMPLETE_CAVEAT.to_owned());
    }
    let report = BoundReport {
        schema: REPORT_SCHEMA.into(),
        seed: TABLE_SEED,
        group: group.to_owned(),
        order,
        simple: simple.0,
        simple_verified: simple.1,
        source: best.name.clone(),
        source_is_group: best.is_self,
        covers: candidates.clone(),
        f,
        reality,
        branch,
        s,
        bound: "upper".into(),
        complete,
        caveats,
        notes,
        alternating: None,
        framing: FRAMING.into(),
    };
    report.check_invariants().map_err(Error::Precondition)?;
    Ok(report)
}

fn summarize(c: &crate::catalog::ServedCover) -> Result<CoverSummary> {
    let table = CharacterTable::compute(&c.group)?;
    let choice = table.min_faithful_degree()?;
    Ok(CoverSummary {
        name: c.name.clone(),
        is_self: c.is_self,
        order: c.group.order() as u64,
        multiplier: c.report.multiplier,
        verified: c.report.passed,
        failed_checks: Vec::new(),
        f: Some(choice.degree),
        reality: Some(choice.reality),
        prime: Some(table.prime()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundOptions {
    pub order_cap: usize,
    pub with_optional: bool,
}

impl Default for BoundOptions {
    fn default() -> Self {
        let c = CoverOptions::default();
        Self { order_cap: c.order_cap, with_optional: c.with_optional }
    }
}

impl From<BoundOptions> for CoverOptions {
    fn from(o: BoundOptions) -> Self {
        CoverOptions { order_cap: o.order_cap, with_optional: o.with_optional }
    }
}

/// Bound for a catalog base group given by name.
pub fn bound_for_name(name: &str, catalog: &Catalog, options: BoundOptions) -> Result<BoundReport> {
    let group = catalog.build_base(name, options.order_cap)?;
    essential_dimension_bound(group, catalog, options)
}

/// Bound for a constructed group. Covers come from the catalog entry matching
/// the group's name; without one, only the group itself is used.
pub fn essential_dimension_bound(group: FiniteGroup, catalog: &Catalog, options: BoundOptions) -> Result<BoundReport> {
    let name = group.name().unwrap_or("G").to_owned();
    if group.is_abelian() {
        return Err(Error::NotSimple(format!("{name} is abelian; a nonabelian simple group is required")));
    }
    if !group.is_simple()? {
        return Err(Error::NotSimple(format!("{name} is not simple")));
    }
    let order = group.order() as u64;
    let alt = alternating_degree(&group);
    let mut missing_base = None;
    let search = match group.name().map(|n| catalog.base(n)) {
        Some(Ok(base)) => {
            let base_name = base.name.clone();
            catalog.covers_for_group(&base_name, group, options.into())?
        }
        Some(Err(CatalogError::UnknownBase(n))) => {
            missing_base = Some(n);
            self_only(group)
        }
        Some(Err(e)) => return Err(e.into()),
        None => {
            missing_base = Some(name.clone());
            self_only(group)
        }
    };
    let mut candidates = Vec::new();
    for c in &search.served {
        candidates.push(summarize(c)?);
    }
    for r in &search.rejected {
        candidates.push(CoverSummary {
            name: r.entry.clone(),
            is_self: false,
            order: r.cover_order,
            multiplier: r.multiplier,
            verified: false,
            failed_checks: r.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect(),
            f: None,
            reality: None,
            prime: None,
        });
    }
    let mut report = select(&name, order, (true, true), candidates, search.complete)?;
    if let Some(base) = missing_base {
        report.notes.push(format!("catalog has no entry for `{base}`; only the group itself was used"));
    }
    if let Some(n) = alt {
        report.alternating = Some(alternating_note(n, report.s));
    }
    Ok(report)
}

fn self_only(group: FiniteGroup) -> CoverSearch {
    let report = crate::catalog::verify_trivial_cover(&group);
    CoverSearch {
        served: vec![crate::catalog::ServedCover {
            name: group.name().unwrap_or("G").to_owned(),
            is_self: true,
            group,
            report,
        }],
        rejected: Vec::new(),
        complete: false,
    }
}

/// Externally supplied degree data for groups beyond the order cap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeData {
    pub group: String,
    pub order: u64,
    /// Degree of the natural action if the group is alternating.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alternating_degree: Option<u64>,
    /// Set when every maximal cover is listed.
    #[serde(default)]
    pub complete: bool,
    pub table: Vec<DegreeTable>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeTable {
    pub name: String,
    pub order: u64,
    #[serde(default)]
    pub is_self: bool,
    pub degrees: Vec<u64>,
    /// Frobenius–Schur indicators (1, 0, -1).
    pub indicators: Vec<i8>,
    pub faithful: Vec<bool>,
}

impl DegreeData {
    pub fn parse(text: &str) -> Result<Self> {
        let data: Self = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        data.check()?;
        Ok(data)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
        Self::parse(&text)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("degree data always serializes")
    }

    /// Degree data of a computed table.
    pub fn table_from(name: &str, is_self: bool, table: &CharacterTable) -> Result<DegreeTable> {
        let n = table.num_classes();
        Ok(DegreeTable {
            name: name.to_owned(),
            order: table.order(),
            is_self,
            degrees: table.degrees().to_vec(),
            indicators: (0..n).map(|i| table.fs_indicator(i).map(RealityType::indicator)).collect::<std::result::Result<_, _>>()?,
            faithful: (0..n).map(|i| table.is_faithful(i)).collect::<std::result::Result<_, _>>()?,
        })
    }

    /// Consistency checks applied before the data is used.
    pub fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::DegreeData(m));
        if self.table.iter().filter(|t| t.is_self).count() != 1 {
            return bad("exactly one table must have `is_self = true`".into());
        }
        for t in &self.table {
            let k = t.degrees.len();
            if k == 0 || t.indicators.len() != k || t.faithful.len() != k {
                return bad(format!("{}: degrees, indicators and faithful lists must have one equal, nonzero length", t.name));
            }
            let sq: u128 = t.degrees.iter().map(|&d| d as u128 * d as u128).sum();
            if sq != t.order as u128 {
                return bad(format!("{}: sum of squared degrees is {sq}, not |G| = {}", t.name, t.order));
            }
            if let Some(d) = t.degrees.iter().find(|&&d| d == 0 || t.order % d != 0) {
                return bad(format!("{}: degree {d} does not divide {}", t.name, t.order));
            }
            if let Some(i) = t.indicators.iter().find(|i| !(-1..=1).contains(*i)) {
                return bad(format!("{}: indicator {i} is not -1, 0 or 1", t.name));
            }
            if t.is_self && t.order != self.order {
                return bad(format!("{}: order {} differs from the group order {}", t.name, t.order, self.order));
            }
            if !t.is_self && (t.order <= self.order || t.order % self.order != 0) {
                return bad(format!("{}: a cover's order must be a proper multiple of {}", t.name, self.order));
            }
        }
        Ok(())
    }
}

/// Bound from degree data alone; simplicity is taken from the input.
pub fn bound_from_degrees(data: &DegreeData) -> Result<BoundReport> {
    data.check()?;
    let mut candidates: Vec<CoverSummary> = Vec::new();
    for t in &data.table {
        let best = (0..t.degrees.len())
            .filter(|&i| t.faithful[i])
            .map(|i| (t.degrees[i], RealityType::from_indicator(t.indicators[i]).expect("checked")))
            .min();
        candidates.push(CoverSummary {
            name: t.name.clone(),
            is_self: t.is_self,
            order: t.order,
            multiplier: t.order / data.order,
            verified: true,
            failed_checks: Vec::new(),
            f: best.map(|b| b.0),
            reality: best.map(|b| b.1),
            prime: None,
        });
    }
    candidates.sort_by_key(|c| !c.is_self);
    let mut report = select(&data.group, data.order, (true, false), candidates, data.complete)?;
    report.caveats.push("degree data supplied externally; simplicity and covers not verified".into());
    if let Some(n) = data.alternating_degree {
        report.alternating = Some(alternating_note(n, report.s));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_rule() {
        assert_eq!(alternating_check(8).unwrap(), 5);
        assert_eq!(alternating_check(9).unwrap(), 6);
        assert!(matches!(alternating_check(7), Err(Error::Precondition(_))));
    }

    #[test]
    fn degree_data_is_checked() {
        let ok = "group = \"A5\"\norder = 60\n[[table]]\nname = \"A5\"\norder = 60\nis_self = true\n\
                  degrees = [1, 3, 3, 4, 5]\nindicators = [1, 1, 1, 1, 1]\nfaithful = [false, true, true, true, true]\n";
        let data = DegreeData::parse(ok).unwrap();
        let report = bound_from_degrees(&data).unwrap();
        assert_eq!((report.f, report.s, report.branch), (3, 1, Branch::Orthogonal));
        assert!(!report.simple_verified);
        let bad = ok.replace("[1, 3, 3, 4, 5]", "[1, 3, 3, 4, 4]");
        assert!(matches!(DegreeData::parse(&bad), Err(Error::DegreeData(_))));
        let bad = ok.replace("[1, 1, 1, 1, 1]", "[1, 1, 2, 1, 1]");
        assert!(matches!(DegreeData::parse(&bad), Err(Error::DegreeData(_))));
    }

    #[test]
    fn invariant_check_catches_bad_branch() {
        let data = DegreeData::parse(
            "group = \"A5\"\norder = 60\n[[table]]\nname = \"A5\"\norder = 60\nis_self = true\n\
             degrees = [1, 3, 3, 4, 5]\nindicators = [1, 1, 1, 1, 1]\nfaithful = [false, true, true, true, true]\n",
        )
        .unwrap();
        let mut r = bound_from_degrees(&data).unwrap();
        r.source_is_group = false;
        assert!(r.check_invariants().is_err());
        r.source_is_group = true;
        r.s = 2;
        assert!(r.check_invariants().is_err());
    }
}
