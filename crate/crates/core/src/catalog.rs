//! Catalog of base groups and their covering groups, with verification of the
//! central-extension properties for every entry before it is served.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::element::GroupElement;
use crate::error::GroupError;
use crate::group::{ClassInvariants, FiniteGroup};
use crate::groupfile::GroupDefinition;

/// The catalog shipped with the library.
pub const BUILTIN_CATALOG: &str = include_str!("../data/catalog.toml");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("catalog parse error: {0}")]
    Parse(String),
    #[error("unknown base group `{0}`")]
    UnknownBase(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("duplicate catalog name `{0}`")]
    DuplicateName(String),
    #[error("base `{base}` has more than one maximal cover ({first}, {second})")]
    DuplicateMaximal { base: String, first: String, second: String },
    #[error("maximal cover `{cover}` has |M| = {multiplier} but base `{base}` declares {declared}")]
    MultiplierMismatch { cover: String, base: String, multiplier: u64, declared: u64 },
    #[error("building `{name}`: {source}")]
    Construction { name: String, source: GroupError },
}

impl CatalogError {
    pub fn category(&self) -> &'static str {
        match self {
            CatalogError::Parse(_) => "catalog-parse",
            CatalogError::UnknownBase(_) => "unknown-base",
            CatalogError::UnknownEntry(_) => "unknown-entry",
            CatalogError::DuplicateName(_) => "duplicate-name",
            CatalogError::DuplicateMaximal { .. } => "duplicate-maximal-cover",
            CatalogError::MultiplierMismatch { .. } => "multiplier-mismatch",
            CatalogError::Construction { source: GroupError::CapExceeded { .. }, .. } => "cap-exceeded",
            CatalogError::Construction { .. } => "construction",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub aliases: Vec<String>,
    /// Declared order of the Schur multiplier (trusted).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplier: Option<u64>,
    pub group: GroupDefinition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverEntry {
    pub name: String,
    pub base: String,
    /// Claimed |M|.
    pub multiplier: u64,
    /// Claimed to be a full representation group. Asserted, not verified.
    #[serde(default)]
    pub maximal: bool,
    #[serde(default)]
    pub optional: bool,
    #[serde(default)]
    pub provenance: String,
    /// Generators of M, in the encoding of `group`.
    pub center: Vec<Vec<u32>>,
    pub group: GroupDefinition,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Catalog {
    #[serde(default)]
    pub base: Vec<BaseEntry>,
    #[serde(default)]
    pub cover: Vec<CoverEntry>,
}

fn normalize(name: &str) -> String {
    name.chars().filter(|c| c.is_ascii_alphanumeric() || *c == '.').collect::<String>().to_ascii_lowercase()
}

impl Catalog {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN_CATALOG).expect("shipped catalog is valid")
    }

    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        let cat: Self = toml::from_str(text).map_err(|e| CatalogError::Parse(e.to_string()))?;
        cat.check()?;
        Ok(cat)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, CatalogError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| CatalogError::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("catalog always serializes")
    }

    /// Structural checks: unique names, known bases, at most one maximal cover per base.
    pub fn check(&self) -> Result<(), CatalogError> {
        let mut seen = BTreeSet::new();
        let names = self
            .base
            .iter()
            .flat_map(|b| std::iter::once(&b.name).chain(&b.aliases))
            .chain(self.cover.iter().map(|c| &c.name));
        for name in names {
            if !seen.insert(normalize(name)) {
                return Err(CatalogError::DuplicateName(name.clone()));
            }
        }
        let mut maximal: BTreeMap<&str, &str> = BTreeMap::new();
        for c in &self.cover {
            let base = self.base(&c.base)?;
            if !c.maximal {
                continue;
            }
            if let Some(first) = maximal.insert(base.name.as_str(), c.name.as_str()) {
                return Err(CatalogError::DuplicateMaximal {
                    base: base.name.clone(),
                    first: first.to_owned(),
                    second: c.name.clone(),
                });
            }
            if let Some(declared) = base.multiplier {
                if declared != c.multiplier {
                    return Err(CatalogError::MultiplierMismatch {
                        cover: c.name.clone(),
                        base: base.name.clone(),
                        multiplier: c.multiplier,
                        declared,
                    });
                }
            }
        }
        Ok(())
    }

    /// Base entry by name or alias (case, spaces and punctuation ignored).
    pub fn base(&self, name: &str) -> Result<&BaseEntry, CatalogError> {
        let key = normalize(name);
        self.base
            .iter()
            .find(|b| normalize(&b.name) == key || b.aliases.iter().any(|a| normalize(a) == key))
            .ok_or_else(|| CatalogError::UnknownBase(name.to_owned()))
    }

    pub fn cover(&self, name: &str) -> Result<&CoverEntry, CatalogError> {
        let key = normalize(name);
        self.cover
            .iter()
            .find(|c| normalize(&c.name) == key)
            .ok_or_else(|| CatalogError::UnknownEntry(name.to_owned()))
    }

    /// Cover entries of `base`, optional ones only when requested.
    pub fn entries_for(&self, base: &str, with_optional: bool) -> Result<Vec<&CoverEntry>, CatalogError> {
        let b = self.base(base)?;
        Ok(self
            .cover
            .iter()
            .filter(|c| normalize(&c.base) == normalize(&b.name) || b.aliases.iter().any(|a| normalize(a) == normalize(&c.base)))
            .filter(|c| with_optional || !c.optional)
            .collect())
    }

    pub fn build_base(&self, name: &str, cap: usize) -> Result<FiniteGroup, CatalogError> {
        let b = self.base(name)?;
        let g = b
            .group
            .build(cap)
            .map_err(|source| CatalogError::Construction { name: b.name.clone(), source })?;
        Ok(g.with_name(b.name.clone()))
    }

    /// Verifies `entry` against its base and serves the cover on success.
    pub fn verify_entry(&self, entry: &CoverEntry, cap: usize) -> Result<(VerificationReport, FiniteGroup), CatalogError> {
        let base = self.build_base(&entry.base, cap)?;
        verify_cover(entry, &base, cap)
    }

    /// Every verified cover of `base`, starting with the base itself as its trivial cover.
    pub fn covers_of(&self, base: &str, options: CoverOptions) -> Result<CoverSearch, CatalogError> {
        let group = self.build_base(base, options.order_cap)?;
        self.covers_for_group(base, group, options)
    }

    /// Like [`Catalog::covers_of`] for an already constructed base group; every
    /// entry is verified against `group` itself.
    pub fn covers_for_group(
        &self,
        base: &str,
        group: FiniteGroup,
        options: CoverOptions,
    ) -> Result<CoverSearch, CatalogError> {
        let entry = self.base(base)?;
        let mut served = Vec::new();
        let mut rejected = Vec::new();
        let mut complete = entry.multiplier == Some(1);
        for c in self.entries_for(base, options.with_optional)? {
            let (report, k) = verify_cover(c, &group, options.order_cap)?;
            if report.passed {
                complete |= c.maximal;
                served.push(ServedCover { name: c.name.clone(), is_self: false, group: k, report });
            } else {
                rejected.push(report);
            }
        }
        let own = ServedCover {
            name: group.name().unwrap_or(&entry.name).to_owned(),
            is_self: true,
            report: verify_trivial_cover(&group),
            group,
        };
        served.insert(0, own);
        Ok(CoverSearch { served, rejected, complete })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverOptions {
    pub order_cap: usize,
    pub with_optional: bool,
}

impl Default for CoverOptions {
    fn default() -> Self {
        Self { order_cap: crate::group::DEFAULT_ORDER_CAP, with_optional: false }
    }
}

#[derive(Debug)]
pub struct ServedCover {
    pub name: String,
    pub is_self: bool,
    pub group: FiniteGroup,
    pub report: VerificationReport,
}

#[derive(Debug)]
pub struct CoverSearch {
    /// The base group itself comes first.
    pub served: Vec<ServedCover>,
    pub rejected: Vec<VerificationReport>,
    /// A verified maximal cover was served (or the multiplier is declared trivial).
    pub complete: bool,
}

impl CoverSearch {
    pub fn base(&self) -> &FiniteGroup {
        &self.served[0].group
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub entry: String,
    pub base: String,
    pub cover_order: u64,
    pub base_order: u64,
    pub multiplier: u64,
    pub checks: Vec<CheckResult>,
    pub quotient_invariants: Option<ClassInvariants>,
    pub base_invariants: ClassInvariants,
    /// Maximality is asserted from provenance only.
    pub maximality: String,
    pub passed: bool,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_MEMBERSHIP: &str = "center-generators-in-cover";
pub const CHECK_ORDER: &str = "order";
pub const CHECK_CENTRAL: &str = "central";
pub const CHECK_COMMUTATOR: &str = "in-commutator-subgroup";
pub const CHECK_QUOTIENT: &str = "quotient-invariants";

fn check(name: &str, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult { name: name.to_owned(), passed, detail: detail.into() }
}

/// The base group as its own cover with trivial M.
pub fn verify_trivial_cover(base: &FiniteGroup) -> VerificationReport {
    let inv = base.invariants();
    let name = base.name().unwrap_or("G").to_owned();
    let commutator = base.commutator_subgroup().order() == base.order();
    VerificationReport {
        entry: name.clone(),
        base: name,
        cover_order: base.order() as u64,
        base_order: base.order() as u64,
        multiplier: 1,
        checks: vec![
            check(CHECK_ORDER, true, "|K| = 1 * |G|"),
            check(CHECK_CENTRAL, true, "M is trivial"),
            check(CHECK_COMMUTATOR, true, if commutator { "M is trivial; G is perfect" } else { "M is trivial" }),
            check(CHECK_QUOTIENT, true, "K/M = G"),
        ],
        quotient_invariants: Some(inv.clone()),
        base_invariants: inv,
        maximality: "not claimed".into(),
        passed: true,
    }
}

/// Checks |K| = |M| |G|, M central, M inside [K,K], and invariants of K/M against G.
pub fn verify_cover(
    entry: &CoverEntry,
    base: &FiniteGroup,
    cap: usize,
) -> Result<(VerificationReport, FiniteGroup), CatalogError> {
    let construction = |source| CatalogError::Construction { name: entry.name.clone(), source };
    let k = entry.group.build(cap).map_err(construction)?.with_name(entry.name.clone());
    let base_invariants = base.invariants();
    let mut report = VerificationReport {
        entry: entry.name.clone(),
        base: base.name().unwrap_or(&entry.base).to_owned(),
        cover_order: k.order() as u64,
        base_order: base.order() as u64,
        multiplier: entry.multiplier,
        checks: Vec::new(),
        quotient_invariants: None,
        base_invariants,
        maximality: if entry.maximal { "asserted (not verified)".into() } else { "not claimed".into() },
        passed: false,
    };

    let mut m_gens = Vec::new();
    for ints in &entry.center {
        let x = entry.group.decode_element(ints).map_err(construction)?;
        if !k.contains(&x) {
            report.checks.push(check(CHECK_MEMBERSHIP, false, format!("{x:?} is not in the cover")));
            return Ok((report, k));
        }
        m_gens.push(x);
    }
    if m_gens.is_empty() {
        m_gens.push(k.identity().clone());
    }
    report.checks.push(check(CHECK_MEMBERSHIP, true, format!("{} generator(s)", m_gens.len())));
    let m = k.subgroup(&m_gens).map_err(construction)?;

    let expected = entry.multiplier * base.order() as u64;
    let order_ok = k.order() as u64 == expected && m.order() as u64 == entry.multiplier;
    report.checks.push(check(
        CHECK_ORDER,
        order_ok,
        format!("|K| = {}, |M| = {}, |M| |G| = {}", k.order(), m.order(), m.order() * base.order()),
    ));

    let central_witness = m_gens.iter().find_map(|x| {
        k.generators().iter().find(|g| x.mul(g) != g.mul(x)).map(|g| (x.clone(), g.clone()))
    });
    report.checks.push(match &central_witness {
        None => check(CHECK_CENTRAL, true, "every generator of M commutes with every generator of K"),
        Some((x, g)) => check(CHECK_CENTRAL, false, format!("{x:?} does not commute with {g:?}")),
    });

    let derived = k.commutator_subgroup();
    let outside: Option<&GroupElement> = m.elements().iter().find(|x| !derived.contains(x));
    report.checks.push(match outside {
        None => check(CHECK_COMMUTATOR, true, format!("[K,K] has order {}", derived.order())),
        Some(x) => check(CHECK_COMMUTATOR, false, format!("{x:?} is not in [K,K] (order {})", derived.order())),
    });

    // a non-normal M has no quotient; centrality failure already reports why
    match k.quotient_class_data(&m) {
        Ok(q) => {
            let ok = q == report.base_invariants;
            report.checks.push(check(
                CHECK_QUOTIENT,
                ok,
                if ok { "class sizes and element orders agree".to_owned() } else { "K/M invariants differ from G".to_owned() },
            ));
            report.quotient_invariants = Some(q);
        }
        Err(e) => report.checks.push(check(CHECK_QUOTIENT, false, e.to_string())),
    }
    report.passed = report.checks.iter().all(|c| c.passed);
    Ok((report, k))
}
