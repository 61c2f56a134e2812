//! Named structures with expected verdicts, and the verification suites run
//! against them.

use crate::bridge::{check_assumption_hyper1_rel, elimination_profile, hypersystem_of, retraction_suite};
use crate::constructions::{semidirect_naturals, symmetrize_bipotent, truncate_naturals};
use crate::error::{Error, Result};
use crate::families::{
    boolean, characteristic_triple, grades, krasner, sign_semiring, signs, tropical_hyperfield, viro_multigroup,
    weak_phase, Integers, NHat, Phase, Supertropical, SymMaxPlus, Triangle,
};
use crate::hsf::Structure;
use crate::hyper::{
    check_hypergroup, check_hyperring, check_reversibility_equivalence, prime_field, quotient_hyperring,
};
use crate::report::Report;
use crate::systems::{check_surpassing_axioms, check_triple, classify, BalanceContext};

/// Which checks to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Classify,
    Profile,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "axioms" => Ok(Suite::Axioms),
            "classify" => Ok(Suite::Classify),
            "profile" => Ok(Suite::Profile),
            "all" => Ok(Suite::All),
            _ => Err(Error::Domain(format!("unknown suite {s}"))),
        }
    }

    fn has(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

/// A catalog structure with the verdicts it is expected to produce.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub note: String,
    pub structure: Structure,
    /// `(axiom, verdict)` pairs; axioms not listed are not compared.
    pub expected: Vec<(String, bool)>,
}

impl CatalogEntry {
    /// Entries kept to exhibit a failure.
    pub fn negative_fixture(&self) -> bool {
        self.note.starts_with("negative fixture")
    }
}

fn entry(name: &str, note: &str, structure: Structure, expected: &[(&str, bool)]) -> CatalogEntry {
    CatalogEntry {
        name: name.into(),
        note: note.into(),
        structure,
        expected: expected.iter().map(|&(a, v)| (a.to_string(), v)).collect(),
    }
}

const HYPERFIELD: &[(&str, bool)] = &[
    ("associativity", true),
    ("unique-hypernegative", true),
    ("reversibility", true),
    ("single-distributivity", true),
    ("hyperfield", true),
    ("tangibly-balanced", true),
    ("balance-elimination", true),
];

const NAMES: &[&str] = &[
    "krasner",
    "signs",
    "fp-mod-g",
    "viro-multigroup",
    "tropical-hyperfield",
    "weak-phase",
    "supertropical",
    "symmetrized-maxplus",
    "sign-semiring",
    "boolean",
    "bipotent-symmetrized-boolean",
    "characteristic-triple",
    "layered-n",
    "phase",
    "triangle",
    "nhat",
    "z-hyperfield",
    "semidirect-n1",
    "semidirect-n2",
];

/// Names in stable order. Parameterized entries also accept `name:args`,
/// e.g. `fp-mod-g:13:1,3,9`, `layered-n:5`, `phase:6`, `weak-phase:8`,
/// `triangle:4`.
pub fn names() -> &'static [&'static str] {
    NAMES
}

/// Every entry with default parameters.
pub fn catalog_list() -> Result<Vec<CatalogEntry>> {
    NAMES.iter().map(|n| lookup(n)).collect()
}

fn arg<T: std::str::FromStr>(args: Option<&str>, default: T) -> Result<T> {
    match args {
        None => Ok(default),
        Some(a) => a.parse().map_err(|_| Error::Domain(format!("bad parameter {a}"))),
    }
}

/// Builds a catalog entry by name.
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    let (base, args) = match name.split_once(':') {
        Some((b, a)) => (b, Some(a)),
        None => (name, None),
    };
    let e = match base {
        "krasner" => entry(
            "krasner",
            "Krasner hyperfield {0,1}",
            Structure::Hyper(krasner()),
            &[HYPERFIELD, &[("double-distributivity", true)]].concat(),
        ),
        "signs" => entry(
            "signs",
            "hyperfield of signs",
            Structure::Hyper(signs()),
            &[HYPERFIELD, &[("double-distributivity", true)]].concat(),
        ),
        "fp-mod-g" => {
            let (p, g) = match args {
                None => (11, vec![1, 10]),
                Some(a) => {
                    let (p, g) = a.split_once(':').unwrap_or((a, "1"));
                    let p: usize = p.parse().map_err(|_| Error::Domain(format!("bad prime {p}")))?;
                    let g = g
                        .split(',')
                        .map(|x| {
                            x.trim()
                                .parse::<usize>()
                                .map_err(|_| Error::Domain(format!("bad element {x}")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    (p, g)
                }
            };
            if p < 2 || !(2..p).all(|d| p % d != 0) {
                return Err(Error::Domain(format!("{p} is not prime")));
            }
            let h = quotient_hyperring(&prime_field(p), &g)?;
            let nm = match args {
                None => "fp-mod-g".to_string(),
                Some(_) => name.to_string(),
            };
            entry(
                &nm,
                "quotient hyperfield of a prime field by a unit subgroup",
                Structure::Hyper(h),
                &[HYPERFIELD, &[("retraction", true)]].concat(),
            )
        }
        "viro-multigroup" => entry(
            "viro-multigroup",
            "negative fixture: multigroup that is not a hypergroup",
            Structure::Hyper(viro_multigroup()),
            &[
                ("unique-hypernegative", true),
                ("reversibility", false),
                ("neg-additive-on-generated", false),
                ("rev1-agreement", true),
            ],
        ),
        "tropical-hyperfield" => entry(
            "tropical-hyperfield",
            "tropical hyperfield on the grades -2..2",
            Structure::Hyper(tropical_hyperfield(&grades(-2, 2))),
            &[
                ("associativity", true),
                ("reversibility", true),
                ("unique-hypernegative", true),
            ],
        ),
        "weak-phase" => {
            let k = arg(args, 4usize)?;
            if k < 2 || k % 2 != 0 {
                return Err(Error::Domain("weak phase needs an even k ≥ 2".into()));
            }
            entry(
                "weak-phase",
                "weak phase hyperfield on k-th roots of unity",
                Structure::Hyper(weak_phase(k)),
                &[("associativity", true), ("reversibility", true), ("hyperfield", true)],
            )
        }
        "supertropical" => entry(
            "supertropical",
            "supertropical semiring on the grade window -2..2",
            Structure::System(Supertropical::table(&grades(-2, 2))),
            &[
                ("second-kind", false),
                ("bipotent", true),
                ("shallow", true),
                ("tangibly-balanced", true),
                ("balance-elimination", true),
            ],
        ),
        "symmetrized-maxplus" => entry(
            "symmetrized-maxplus",
            "symmetrized max-plus semiring on the grade window -1..1",
            Structure::System(SymMaxPlus::table(&grades(-1, 1))),
            &[
                ("second-kind", true),
                ("bipotent", true),
                ("shallow", true),
                ("tangibly-balanced", true),
                ("balance-elimination", true),
            ],
        ),
        "sign-semiring" => entry(
            "sign-semiring",
            "the sign semiring {0,1,-1,inf}",
            Structure::System(sign_semiring()),
            &[
                ("second-kind", true),
                ("shallow", true),
                ("tangibly-balanced", true),
                ("balance-elimination", true),
            ],
        ),
        "boolean" => entry(
            "boolean",
            "Boolean semiring with identity negation",
            Structure::System(boolean()),
            &[("second-kind", false)],
        ),
        "bipotent-symmetrized-boolean" => entry(
            "bipotent-symmetrized-boolean",
            "bipotent symmetrization of the Boolean semiring",
            Structure::System(symmetrize_bipotent(&boolean())?),
            &[("second-kind", true), ("shallow", true)],
        ),
        "characteristic-triple" => entry(
            "characteristic-triple",
            "triple {0,1,1o} with T = {1} and identity negation",
            Structure::System(characteristic_triple()),
            &[("second-kind", false), ("shallow", true)],
        ),
        "layered-n" => {
            let m = arg(args, 3usize)?;
            entry(
                "layered-n",
                "naturals truncated at m, T = {1}",
                Structure::System(truncate_naturals(m)?),
                &[("second-kind", false)],
            )
        }
        "phase" => {
            let k = arg(args, 4usize)?;
            entry(
                "phase",
                "phase cones generated by k-th roots of unity",
                Structure::System(Phase::new(k).table()),
                &[("second-kind", true)],
            )
        }
        "triangle" => {
            let n = arg(args, 3u32)?;
            entry(
                "triangle",
                "intervals of admissible triangle sides",
                Structure::System(Triangle { bound: n }.table()),
                &[("second-kind", false)],
            )
        }
        "nhat" => entry(
            "nhat",
            "pairs of naturals with the switch negation",
            Structure::System(NHat { bound: 3 }.table()),
            &[("second-kind", true)],
        ),
        "z-hyperfield" => entry(
            "z-hyperfield",
            "negative fixture: integers with T = {1,-1} under equality",
            Structure::System(Integers { bound: 4 }.table()),
            &[("tangibly-balanced", false)],
        ),
        "semidirect-n1" | "semidirect-n2" => {
            let v = if base.ends_with('1') { 1 } else { 2 };
            entry(
                base,
                "negative fixture: layered naturals with a relation failing the order analog of elimination",
                Structure::System(semidirect_naturals(5, &grades(0, 1), v)?),
                &[("hyper1-nonempty", false), ("tangibly-balanced", true)],
            )
        }
        _ => return Err(Error::Domain(format!("unknown catalog entry {name}"))),
    };
    Ok(e)
}

/// Runs `suite` on a structure.
pub fn run_suite(st: &Structure, suite: Suite) -> Result<Report> {
    match st {
        Structure::Hyper(h) => {
            let mut r = Report::new(&h.name, false);
            if suite.has(Suite::Axioms) {
                if h.has_mul() {
                    r.extend(check_hyperring(h));
                } else {
                    r.extend(check_hypergroup(h));
                }
                r.axioms.extend(check_reversibility_equivalence(h)?);
            }
            let ring = crate::hyper::is_hyperring(&check_hyperring(h));
            if suite.has(Suite::Classify) && ring {
                let s = hypersystem_of(h, true)?;
                r.extend(classify(&s).to_report(&s));
            }
            if suite.has(Suite::Profile) && ring {
                let s = hypersystem_of(h, true)?;
                r.extend(elimination_profile(&s, &BalanceContext::new(&s)).to_report(&s));
                let ret = retraction_suite(h)?;
                if let Some(a) = ret.get("retraction") {
                    r.push(a.clone());
                }
            }
            Ok(r)
        }
        Structure::System(s) => {
            let mut r = Report::new(&s.name, s.window);
            if suite.has(Suite::Axioms) {
                r.extend(check_triple(s));
                r.extend(check_surpassing_axioms(s, &s.leq));
            }
            if suite.has(Suite::Classify) {
                r.extend(classify(s).to_report(s));
            }
            if suite.has(Suite::Profile) {
                r.extend(elimination_profile(s, &BalanceContext::new(s)).to_report(s));
                r.extend(check_assumption_hyper1_rel(s, &s.leq)?);
            }
            Ok(r)
        }
    }
}

/// Expected verdicts that disagree with the report, as `(axiom, expected)`;
/// axioms absent from the report are skipped.
pub fn mismatches(entry: &CatalogEntry, report: &Report) -> Vec<(String, bool)> {
    entry
        .expected
        .iter()
        .filter(|(a, v)| report.get(a).is_some_and(|o| o.pass != *v))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_contains_required_names() {
        for n in ["krasner", "viro-multigroup", "z-hyperfield", "fp-mod-g", "triangle"] {
            assert!(names().contains(&n));
        }
        assert!(lookup("missing").is_err());
    }

    #[test]
    fn parameterized_lookup() {
        let e = lookup("fp-mod-g:13:1,3,9").unwrap();
        match e.structure {
            Structure::Hyper(h) => assert_eq!(h.n(), 5),
            _ => panic!("expected a hyper table"),
        }
        assert!(lookup("fp-mod-g:12:1").is_err());
    }
}

#[cfg(test)]
mod selfcheck {
    use super::*;

    #[test]
    fn every_entry_matches_its_expectations() {
        let mut bad = Vec::new();
        for e in catalog_list().unwrap() {
            let r = run_suite(&e.structure, Suite::All).unwrap();
            let m = mismatches(&e, &r);
            if !m.is_empty() {
                bad.push((e.name.clone(), m));
            }
        }
        assert!(bad.is_empty(), "{bad:?}");
    }
}
