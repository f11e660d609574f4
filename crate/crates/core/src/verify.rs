//! Verification suites. Each suite runs one invariant over the corpus (or a
//! fixed family of `PSL(2, q)`) and collects counterexamples.
//!
//! Pairs inside one group are checked in parallel; results keep corpus order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::corpus::{corpus, describe, CorpusGroup, S6Example};
use crate::error::{Error, Result};
use crate::group::{two_part, Group};
use crate::lcg::Lcg;
use crate::limits::Limits;
use crate::oracle::{find_admissible_connection_set_with, verify_witness};
use crate::perfect::{
    applicable_shortcuts, basic_criterion, check_witness, corollary_pair, equivalent_criterion,
    every_subgroup_is_perfect_code, hxz_criterion, is_perfect_code, reduce_ngq,
    two_element_witness, DecisionPath, Shortcut,
};
use crate::perm::Permutation;
use crate::psl2::{psl2_order, Psl2Group};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Example,
    Sl2,
    Ngq,
    Criteria,
    Sub,
    Conjugate,
    Ns,
    Ele,
    OracleEquivalence,
    Corollaries,
    Witness,
    PslOrders,
    Sypsl,
    Psl,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Example,
        Suite::Sl2,
        Suite::Ngq,
        Suite::Criteria,
        Suite::Sub,
        Suite::Conjugate,
        Suite::Ns,
        Suite::Ele,
        Suite::OracleEquivalence,
        Suite::Corollaries,
        Suite::Witness,
        Suite::PslOrders,
        Suite::Sypsl,
        Suite::Psl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Example => "example",
            Suite::Sl2 => "sl2",
            Suite::Ngq => "ngq",
            Suite::Criteria => "criteria",
            Suite::Sub => "sub",
            Suite::Conjugate => "conjugate",
            Suite::Ns => "ns",
            Suite::Ele => "ele",
            Suite::OracleEquivalence => "oracle-equivalence",
            Suite::Corollaries => "corollaries",
            Suite::Witness => "witness",
            Suite::PslOrders => "psl-orders",
            Suite::Sypsl => "sypsl",
            Suite::Psl => "psl",
        }
    }

    /// Largest corpus group order used when no `max_order` is given.
    pub fn default_max_order(self) -> usize {
        match self {
            Suite::OracleEquivalence => 48,
            _ => 120,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_order: Option<usize>,
    pub limits: Limits,
    pub seed: u64,
    /// Number of random 2-generated subgroups of `PSL(2, 17)` in the `psl` suite.
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_order: None,
            limits: Limits::default(),
            seed: Lcg::DEFAULT_SEED,
            samples: 200,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub group: String,
    pub subgroup: String,
    pub detail: String,
}

/// Pairs tested (and skipped as out of bounds) within one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTally {
    pub group: String,
    pub order: usize,
    pub pairs: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub groups: Vec<GroupTally>,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn pairs_tested(&self) -> usize {
        self.groups.iter().map(|g| g.pairs).sum()
    }

    pub fn skipped(&self) -> usize {
        self.groups.iter().map(|g| g.skipped).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Result of checking one subgroup: how many pairs it accounted for and
/// what went wrong.
#[derive(Debug, Default)]
struct Outcome {
    tested: usize,
    skipped: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn one() -> Self {
        Outcome {
            tested: 1,
            ..Outcome::default()
        }
    }

    fn require(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(detail());
        }
    }
}

fn show(x: &Option<Permutation>) -> String {
    x.as_ref()
        .map_or_else(|| "none".to_string(), Permutation::to_string)
}

/// A corpus group with its subgroup lattice and the basic-criterion verdict of each subgroup.
struct Lattice<'a> {
    g: &'a Group,
    subs: Vec<Group>,
    verdicts: Vec<bool>,
}

impl<'a> Lattice<'a> {
    fn new(g: &'a Group, limits: &Limits) -> Result<Self> {
        let subs = g.all_subgroups_bounded(limits.lattice_bound)?;
        let verdicts = subs
            .par_iter()
            .map(|h| basic_criterion(g, h).is_perfect_code)
            .collect();
        Ok(Lattice { g, subs, verdicts })
    }

    fn verdict_of(&self, h: &Group) -> bool {
        let i = self
            .subs
            .binary_search_by(|k| (k.order(), k.elements()).cmp(&(h.order(), h.elements())))
            .expect("every subgroup is in the lattice");
        self.verdicts[i]
    }
}

fn collect(
    name: &str,
    g: &Group,
    subgroups: &[Group],
    outcomes: Vec<Outcome>,
    groups: &mut Vec<GroupTally>,
    failures: &mut Vec<Failure>,
) {
    let mut tally = GroupTally {
        group: name.to_string(),
        order: g.order(),
        pairs: 0,
        skipped: 0,
    };
    for (h, out) in subgroups.iter().zip(outcomes) {
        tally.pairs += out.tested;
        tally.skipped += out.skipped;
        failures.extend(out.failures.into_iter().map(|detail| Failure {
            group: name.to_string(),
            subgroup: describe(h),
            detail,
        }));
    }
    groups.push(tally);
}

/// Runs `check` on every subgroup of every corpus group.
fn lattice_suite<F>(
    suite: Suite,
    corpus: &[CorpusGroup],
    limits: &Limits,
    check: F,
) -> Result<SuiteReport>
where
    F: Fn(&Lattice, &Group) -> Outcome + Sync,
{
    let mut groups = Vec::new();
    let mut failures = Vec::new();
    for entry in corpus {
        let lattice = Lattice::new(&entry.group, limits)?;
        let outcomes: Vec<Outcome> = lattice
            .subs
            .par_iter()
            .map(|h| check(&lattice, h))
            .collect();
        collect(
            &entry.name,
            &entry.group,
            &lattice.subs,
            outcomes,
            &mut groups,
            &mut failures,
        );
    }
    Ok(SuiteReport {
        suite,
        groups,
        failures,
    })
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    let max_order = opts.max_order.unwrap_or(suite.default_max_order());
    let limits = &opts.limits;
    let groups = || corpus(max_order, limits);
    match suite {
        Suite::Example => example_suite(),
        Suite::Sl2 => lattice_suite(suite, &groups()?, limits, check_sl2),
        Suite::Ngq => lattice_suite(suite, &groups()?, limits, check_ngq),
        Suite::Criteria => lattice_suite(suite, &groups()?, limits, check_criteria),
        Suite::Sub => lattice_suite(suite, &groups()?, limits, check_sub),
        Suite::Conjugate => lattice_suite(suite, &groups()?, limits, check_conjugate),
        Suite::Ns => lattice_suite(suite, &groups()?, limits, check_ns),
        Suite::Ele => ele_suite(&groups()?, limits),
        Suite::OracleEquivalence => lattice_suite(suite, &groups()?, limits, |lat, h| {
            check_oracle(lat, h, limits)
        }),
        Suite::Corollaries => lattice_suite(suite, &groups()?, limits, check_corollaries),
        Suite::Witness => lattice_suite(suite, &groups()?, limits, check_witnesses),
        Suite::PslOrders => psl_orders_suite(limits),
        Suite::Sypsl => sypsl_suite(limits),
        Suite::Psl => psl_suite(opts),
    }
}

/// Every Sylow 2-subgroup of `H` (conjugates of one under `H`) is a perfect
/// code, some is, and `H` is: all three agree.
fn check_sl2(lat: &Lattice, h: &Group) -> Outcome {
    let mut out = Outcome::one();
    let v = lat.verdict_of(h);
    let q = h.sylow(2).expect("2 is prime");
    let conjugates: Vec<bool> = h
        .elements()
        .iter()
        .map(|x| lat.verdict_of(&h.conjugate_subgroup(&q, x).expect("x ∈ H")))
        .collect();
    let every = conjugates.iter().all(|&b| b);
    let some = conjugates.iter().any(|&b| b);
    out.require(every == v && some == v, || {
        format!("every-sylow2={every} some-sylow2={some} H={v}")
    });
    out
}

fn check_ngq(lat: &Lattice, h: &Group) -> Outcome {
    let mut out = Outcome::one();
    let g = lat.g;
    let v = lat.verdict_of(h);
    let (q, p) = reduce_ngq(g, h);
    let pq = basic_criterion(&p, &q).is_perfect_code;
    out.require(pq == v, || {
        format!(
            "basic(P,Q)={pq} basic(G,H)={v} |Q|={} |P|={}",
            q.order(),
            p.order()
        )
    });
    let fast = is_perfect_code(g, h);
    out.require(fast.is_perfect_code == v, || {
        format!(
            "fast={} basic={v} witness={}",
            fast.is_perfect_code,
            show(&fast.witness)
        )
    });
    if fast.path == DecisionPath::NgqReduction {
        let t: Vec<usize> = fast.reduction_trace.iter().map(|&(_, n)| n).collect();
        let consistent = t.len() == 3
            && t[0] == q.order()
            && h.order().is_multiple_of(t[0])
            && t[1].is_multiple_of(t[2])
            && t[2].is_multiple_of(t[0])
            && t[2] == p.order();
        out.require(consistent, || format!("inconsistent reduction trace {t:?}"));
    }
    out
}

/// The fast path, the normal-subgroup criterion, the normalizer criterion
/// and the passage to `N_G(H)`, each where its hypotheses hold.
fn check_criteria(lat: &Lattice, h: &Group) -> Outcome {
    let mut out = Outcome::one();
    let g = lat.g;
    let v = lat.verdict_of(h);
    let fast = is_perfect_code(g, h).is_perfect_code;
    out.require(fast == v, || format!("fast={fast} basic={v}"));
    if h.is_normal_in(g) {
        match hxz_criterion(g, h) {
            Ok(b) => out.require(b == v, || format!("hxz={b} basic={v}")),
            Err(e) => out
                .failures
                .push(format!("hxz rejected a normal subgroup: {e}")),
        }
    }
    if let Ok(b) = equivalent_criterion(g, h) {
        out.require(b == v, || format!("equivalent={b} basic={v}"));
        let n = g.normalizer(h);
        let in_n = basic_criterion(&n, h).is_perfect_code;
        out.require(in_n == v, || {
            format!("basic(N_G(H),H)={in_n} basic(G,H)={v}")
        });
    }
    out
}

/// Perfect codes restrict to every intermediate subgroup.
fn check_sub(lat: &Lattice, h: &Group) -> Outcome {
    let mut out = Outcome::default();
    if !lat.verdict_of(h) {
        out.tested = 1;
        return out;
    }
    for k in lat.subs.iter().filter(|k| h.is_subgroup_of(k)) {
        out.tested += 1;
        let b = basic_criterion(k, h).is_perfect_code;
        out.require(b, || format!("not a perfect code of K = <{}>", describe(k)));
    }
    out
}

fn check_conjugate(lat: &Lattice, h: &Group) -> Outcome {
    let mut out = Outcome::one();
    let v = lat.verdict_of(h);
    for x in lat.g.elements() {
        let c = lat.g.conjugate_subgroup(h, x).expect("x ∈ G");
        if lat.verdict_of(&c) != v {
            out.failures
                .push(format!("conjugate by {x} has verdict {}", !v));
            break;
        }
    }
    out
}

/// A perfect-code Sylow 2-subgroup of `H` makes `H` one; odd order or index
/// forces a perfect code; Sylow 2-subgroups containing different 2-subgroups
/// are conjugate.
fn check_ns(lat: &Lattice, h: &Group) -> Outcome {
    let mut out = Outcome::one();
    let g = lat.g;
    let v = lat.verdict_of(h);
    let q = h.sylow(2).expect("2 is prime");
    if lat.verdict_of(&q) {
        out.require(v, || {
            "Sylow 2-subgroup is a perfect code but H is not".to_string()
        });
    }
    if h.order() % 2 == 1 || g.index(h) % 2 == 1 {
        out.require(v, || {
            "odd order or index but not a perfect code".to_string()
        });
    }
    let p0 = g.sylow_containing(2, &q).expect("Q is a 2-subgroup");
    let sylow = g.sylow(2).expect("2 is prime");
    let ok =
        p0.order() as u64 == two_part(g.order() as u64) && g.find_conjugator(&sylow, &p0).is_some();
    out.require(ok, || {
        format!(
            "Sylow 2-subgroup over Q not conjugate to <{}>",
            describe(&sylow)
        )
    });
    out
}

/// Every subgroup is a perfect code exactly when a Sylow 2-subgroup is
/// elementary abelian; otherwise `⟨z²⟩` fails for an element `z` of order 4.
fn ele_suite(corpus: &[CorpusGroup], limits: &Limits) -> Result<SuiteReport> {
    let mut groups = Vec::new();
    let mut failures = Vec::new();
    for entry in corpus {
        let g = &entry.group;
        let lattice = Lattice::new(g, limits)?;
        let predicted = every_subgroup_is_perfect_code(g);
        let actual = lattice.verdicts.iter().all(|&b| b);
        let mut details = Vec::new();
        if predicted != actual {
            details.push(format!("predicate={predicted} exhaustive={actual}"));
        }
        if !predicted {
            let z = g.elements().iter().find(|z| z.order() == 4);
            match z {
                Some(z) => {
                    let zz = g.cyclic_subgroup(&(z * z)).expect("z² ∈ G");
                    if lattice.verdict_of(&zz) {
                        details.push(format!("<{}> is a perfect code", z * z));
                    }
                }
                None => details.push("no element of order 4".to_string()),
            }
        }
        groups.push(GroupTally {
            group: entry.name.clone(),
            order: g.order(),
            pairs: lattice.subs.len(),
            skipped: 0,
        });
        failures.extend(details.into_iter().map(|detail| Failure {
            group: entry.name.clone(),
            subgroup: "*".to_string(),
            detail,
        }));
    }
    Ok(SuiteReport {
        suite: Suite::Ele,
        groups,
        failures,
    })
}

/// The connection-set search agrees with the criterion, and any set it finds
/// is a genuine witness that transports along conjugation.
fn check_oracle(lat: &Lattice, h: &Group, limits: &Limits) -> Outcome {
    let g = lat.g;
    let v = lat.verdict_of(h);
    let found = match find_admissible_connection_set_with(g, h, limits) {
        Ok(found) => found,
        Err(Error::OracleBoundExceeded { .. }) => {
            return Outcome {
                skipped: 1,
                ..Outcome::default()
            }
        }
        Err(e) => {
            let mut out = Outcome::one();
            out.failures.push(e.to_string());
            return out;
        }
    };
    let mut out = Outcome::one();
    out.require(found.is_some() == v, || {
        format!("oracle={} basic={v}", found.is_some())
    });
    if let Some(s) = found {
        let set: Vec<String> = s.elements().iter().map(Permutation::to_string).collect();
        out.require(s.len() == g.index(h) - 1, || {
            format!("|S| = {} for S = {set:?}", s.len())
        });
        out.require(verify_witness(g, h, s.elements()), || {
            format!("S = {set:?} rejected")
        });
        for x in g.elements() {
            let hx = g.conjugate_subgroup(h, x).expect("x ∈ G");
            if !verify_witness(g, &hx, s.conjugate(x).elements()) {
                out.failures
                    .push(format!("S = {set:?} does not transport along {x}"));
                break;
            }
        }
    }
    out
}

fn check_corollaries(lat: &Lattice, h: &Group) -> Outcome {
    let mut out = Outcome::one();
    let g = lat.g;
    let v = lat.verdict_of(h);
    let shortcuts = applicable_shortcuts(g, h);
    let pair_rule = [
        Shortcut::QNormal,
        Shortcut::NormalSylow2,
        Shortcut::AbelianSylow2,
    ];
    if pair_rule.iter().any(|s| shortcuts.contains(s)) {
        let (q, p0) = corollary_pair(g, h);
        let b = basic_criterion(&p0, &q).is_perfect_code;
        let labels: Vec<&str> = shortcuts.iter().map(|s| s.label()).collect();
        out.require(b == v, || {
            format!("{labels:?}: basic(P0,Q)={b} basic(G,H)={v}")
        });
    }
    if shortcuts.contains(&Shortcut::ElementaryAbelianSylow2) {
        out.require(v, || {
            "elementary abelian Sylow 2 but not a perfect code".to_string()
        });
    }
    out
}

/// Failure witnesses from both deciders meet the four conditions, and a
/// 2-element witness exists.
fn check_witnesses(lat: &Lattice, h: &Group) -> Outcome {
    let mut out = Outcome::one();
    let g = lat.g;
    let basic = basic_criterion(g, h);
    let fast = is_perfect_code(g, h);
    for report in [&basic, &fast] {
        let label = report.path.label();
        out.require(report.witness.is_some() != report.is_perfect_code, || {
            format!(
                "{label}: verdict {} with witness {}",
                report.is_perfect_code,
                show(&report.witness)
            )
        });
        if let Some(x) = &report.witness {
            let c = check_witness(g, h, x);
            out.require(c.holds(), || format!("{label}: witness {x} fails {c:?}"));
        }
    }
    if !basic.is_perfect_code {
        match two_element_witness(g, h) {
            Some(x) => {
                let c = check_witness(g, h, &x);
                let ok = c.holds() && x.order().is_power_of_two() && h.contains(&(&x * &x));
                out.require(ok, || format!("2-element witness {x} fails {c:?}"));
            }
            None => out.failures.push("no 2-element witness".to_string()),
        }
    }
    out
}

/// The worked `S6` example.
fn example_suite() -> Result<SuiteReport> {
    let ex = S6Example::new()?;
    let mut failures = Vec::new();
    let mut fail = |group: &str, subgroup: &str, detail: String| {
        failures.push(Failure {
            group: group.to_string(),
            subgroup: subgroup.to_string(),
            detail,
        })
    };
    let expected = [false, false, true];
    for ((gname, g, hname, h), want) in ex.pairs().into_iter().zip(expected) {
        let basic = basic_criterion(g, h);
        let fast = is_perfect_code(g, h);
        if basic.is_perfect_code != want || fast.is_perfect_code != want {
            fail(
                gname,
                hname,
                format!(
                    "basic={} fast={} expected={want}",
                    basic.is_perfect_code, fast.is_perfect_code
                ),
            );
        }
        for w in [&basic.witness, &fast.witness].into_iter().flatten() {
            if !check_witness(g, h, w).holds() {
                fail(gname, hname, format!("witness {w} fails"));
            }
        }
    }
    match find_admissible_connection_set_with(&ex.p, &ex.q, &Limits::default())? {
        Some(s) if verify_witness(&ex.p, &ex.q, s.elements()) && s.len() == 7 => {}
        other => fail("P", "Q", format!("oracle returned {other:?}")),
    }
    let complement: Vec<Permutation> =
        ex.p.generated_subgroup(&crate::spec::parse_generators("(1 2);(3 4 5 6)", 6)?)?
            .elements()
            .iter()
            .filter(|x| !x.is_identity())
            .cloned()
            .collect();
    if !verify_witness(&ex.p, &ex.q, &complement) {
        fail(
            "P",
            "Q",
            "complement <(1 2),(3 4 5 6)> is not a witness".to_string(),
        );
    }
    let (q, p) = reduce_ngq(&ex.g, &ex.h);
    if q.order() != 2 || p.order() != 16 {
        fail(
            "sym:6",
            "H",
            format!("reduction gave |Q| = {}, |P| = {}", q.order(), p.order()),
        );
    }
    // x = (1 3 2 5) normalizes Q, x² ∈ Q, and xQ = {(1 3 2 5), (1 5 2 3)} has no involution
    let x = Permutation::parse("(1 3 2 5)", 6)?;
    if !Group::normalizes(&ex.q, &x) || !check_witness(&ex.g, &ex.q, &x).holds() {
        fail("sym:6", "Q", format!("{x} is not a witness"));
    }
    Ok(SuiteReport {
        suite: Suite::Example,
        groups: vec![GroupTally {
            group: "sym:6".to_string(),
            order: ex.g.order(),
            pairs: 3,
            skipped: 0,
        }],
        failures,
    })
}

/// Field orders for the order-formula suite.
pub const PSL2_ORDER_FIELDS: [u64; 9] = [4, 5, 7, 8, 9, 11, 13, 16, 17];

/// `(q, Sylow 2-order)` for the dihedral Sylow suite.
pub const SYPSL_FIELDS: [(u64, usize); 3] = [(7, 8), (9, 8), (17, 16)];

fn orbit_size(g: &Group, start: usize) -> usize {
    let mut seen = vec![false; g.degree() + 1];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(pt) = stack.pop() {
        for s in g.generators() {
            let img = s.image(pt);
            if !seen[img] {
                seen[img] = true;
                count += 1;
                stack.push(img);
            }
        }
    }
    count
}

fn psl_tally(q: u64, g: &Group, pairs: usize) -> GroupTally {
    GroupTally {
        group: format!("psl2:{q}"),
        order: g.order(),
        pairs,
        skipped: 0,
    }
}

fn psl_orders_suite(limits: &Limits) -> Result<SuiteReport> {
    let built: Vec<(u64, Result<Psl2Group>)> = PSL2_ORDER_FIELDS
        .par_iter()
        .map(|&q| (q, Psl2Group::with_limits(q, limits)))
        .collect();
    let mut groups = Vec::new();
    let mut failures = Vec::new();
    for (q, psl) in built {
        let psl = psl?;
        let g = psl.group();
        let mut details = Vec::new();
        if g.order() as u64 != psl2_order(q) {
            details.push(format!(
                "order {} but formula gives {}",
                g.order(),
                psl2_order(q)
            ));
        }
        if g.degree() as u64 != q + 1 || orbit_size(g, 1) != g.degree() {
            details.push("action is not transitive on q + 1 points".to_string());
        }
        failures.extend(details.into_iter().map(|detail| Failure {
            group: format!("psl2:{q}"),
            subgroup: "-".to_string(),
            detail,
        }));
        groups.push(psl_tally(q, g, 1));
    }
    Ok(SuiteReport {
        suite: Suite::PslOrders,
        groups,
        failures,
    })
}

fn sypsl_suite(limits: &Limits) -> Result<SuiteReport> {
    let mut groups = Vec::new();
    let mut failures = Vec::new();
    for (q, expected) in SYPSL_FIELDS {
        let psl = Psl2Group::with_limits(q, limits)?;
        let sylow = psl.group().sylow(2)?;
        if !psl.sylow2_is_dihedral()? || sylow.order() != expected {
            failures.push(Failure {
                group: format!("psl2:{q}"),
                subgroup: describe(&sylow),
                detail: format!(
                    "Sylow 2-subgroup of order {} (expected dihedral of order {expected})",
                    sylow.order()
                ),
            });
        }
        groups.push(psl_tally(q, psl.group(), 1));
    }
    Ok(SuiteReport {
        suite: Suite::Sypsl,
        groups,
        failures,
    })
}

/// Distinct cyclic subgroups of `G`, in order of their least generator.
pub fn cyclic_subgroups(g: &Group) -> Vec<Group> {
    let mut seen = std::collections::HashSet::new();
    g.elements()
        .iter()
        .filter_map(|x| {
            let c = g.cyclic_subgroup(x).expect("x ∈ G");
            seen.insert(c.elements().to_vec()).then_some(c)
        })
        .collect()
}

/// `⟨a, b⟩` for `samples` pairs drawn with the generator seeded by `seed`.
pub fn sampled_subgroups(g: &Group, samples: usize, seed: u64) -> Vec<Group> {
    let mut rng = Lcg::new(seed);
    let pairs: Vec<(usize, usize)> = (0..samples)
        .map(|_| (rng.below(g.order()), rng.below(g.order())))
        .collect();
    pairs
        .par_iter()
        .map(|&(a, b)| {
            let gens = [g.elements()[a].clone(), g.elements()[b].clone()];
            g.generated_subgroup(&gens).expect("elements of G")
        })
        .collect()
}

fn classify_all(psl: &Psl2Group, subs: &[Group]) -> Vec<Outcome> {
    subs.par_iter()
        .map(|h| {
            let mut out = Outcome::one();
            match psl.classify(h) {
                Ok((case, predicted)) => {
                    let actual = is_perfect_code(psl.group(), h).is_perfect_code;
                    out.require(predicted == actual, || {
                        format!(
                            "case {} predicts {predicted}, checker says {actual}",
                            case.label()
                        )
                    });
                }
                Err(e) => out.failures.push(e.to_string()),
            }
            out
        })
        .collect()
}

/// Maximal subgroups of `G` among `subs` (which must be the whole lattice).
fn maximal_subgroups<'a>(g: &Group, subs: &'a [Group]) -> Vec<&'a Group> {
    subs.iter()
        .filter(|k| k.order() < g.order())
        .filter(|k| {
            !subs
                .iter()
                .any(|l| l.order() > k.order() && l.order() < g.order() && k.is_subgroup_of(l))
        })
        .collect()
}

/// The classification of subgroup perfect codes in `PSL(2, q)`.
fn psl_suite(opts: &VerifyOptions) -> Result<SuiteReport> {
    let limits = &opts.limits;
    let mut groups = Vec::new();
    let mut failures = Vec::new();

    for q in [7, 9] {
        let psl = Psl2Group::with_limits(q, limits)?;
        let subs = cyclic_subgroups(psl.group());
        let outcomes = classify_all(&psl, &subs);
        collect(
            &format!("psl2:{q} cyclic"),
            psl.group(),
            &subs,
            outcomes,
            &mut groups,
            &mut failures,
        );
    }

    let psl = Psl2Group::with_limits(17, limits)?;
    let subs = sampled_subgroups(psl.group(), opts.samples, opts.seed);
    let outcomes = classify_all(&psl, &subs);
    collect(
        &format!("psl2:17 sampled seed={}", opts.seed),
        psl.group(),
        &subs,
        outcomes,
        &mut groups,
        &mut failures,
    );

    // the whole lattice of PSL(2, 7), and its maximal subgroups
    let psl = Psl2Group::with_limits(7, limits)?;
    let g = psl.group();
    let lattice = g.all_subgroups_bounded(limits.lattice_bound)?;
    let outcomes = classify_all(&psl, &lattice);
    collect(
        "psl2:7 lattice",
        g,
        &lattice,
        outcomes,
        &mut groups,
        &mut failures,
    );

    let maximal = maximal_subgroups(g, &lattice);
    let borel = psl.point_stabilizer();
    let mut spot: Vec<Group> = vec![borel.clone()];
    spot.extend(
        maximal
            .iter()
            .filter(|k| k.order() == 24)
            .map(|k| (*k).clone()),
    );
    let outcomes: Vec<Outcome> = spot
        .iter()
        .map(|k| {
            let mut out = Outcome::one();
            out.require(maximal.contains(&k), || {
                format!("order {} subgroup is not maximal", k.order())
            });
            out.require(is_perfect_code(g, k).is_perfect_code, || {
                "maximal subgroup is not a perfect code".to_string()
            });
            out
        })
        .collect();
    let mut extra = Vec::new();
    if borel.order() != 21 || spot.len() < 2 {
        extra.push(Failure {
            group: "psl2:7 maximal".to_string(),
            subgroup: "-".to_string(),
            detail: format!(
                "point stabilizer order {}, {} order-24 maximal subgroups",
                borel.order(),
                spot.len() - 1
            ),
        });
    }
    collect(
        "psl2:7 maximal",
        g,
        &spot,
        outcomes,
        &mut groups,
        &mut failures,
    );
    failures.extend(extra);

    for q in [4, 5, 8, 11, 13] {
        let psl = Psl2Group::with_limits(q, limits)?;
        if !every_subgroup_is_perfect_code(psl.group()) {
            failures.push(Failure {
                group: format!("psl2:{q}"),
                subgroup: "*".to_string(),
                detail: "Sylow 2-subgroup is not elementary abelian".to_string(),
            });
        }
        groups.push(psl_tally(q, psl.group(), 1));
    }

    Ok(SuiteReport {
        suite: Suite::Psl,
        groups,
        failures,
    })
}
