use std::time::Instant;

use serde_json::{json, Value};

use cayaut::autgrp::{
    arc_transitivity_check, aut_gs_bruteforce, aut_gs_fast, bruteforce_aut_count,
    build_normalizer_group, normality_from, set_preserving_automorphisms, stabilizer_search,
    structure_probe, AUT_GS_BRUTEFORCE_MAX, BRUTEFORCE_MAX_VERTICES,
};
use cayaut::cayley::{factorial, verify_local_structure};
use cayaut::cycles::{enumerate_cycles, CaseTag};
use cayaut::genset::{check_relations, RelationStatus, RELATIONS};
use cayaut::{CayleyGraph, GenSet, Parallelism, Permutation, Result, StabilizerResult};

use crate::args::{AutMode, Cli, Command, SetSpec};
use crate::report::{Claim, Report, Status};

mod statement {
    pub const CENSUS_A: &str = "exactly one 12-cycle passes through e, c and c^-1 when n >= 13";
    pub const CENSUS_B_PLUS: &str = "exactly two 12-cycles pass through e, (1 2) and c when n >= 13";
    pub const CENSUS_B_MINUS: &str = "exactly two 12-cycles pass through e, (1 2) and c^-1 when n >= 13";
    pub const CENSUS_TWELVE: &str = "at n = 12 at least two 12-cycles pass through e, c and c^-1";
    pub const CENSUS_CUSTOM: &str = "simple cycles of the given length through the given anchors";
    pub const LOCAL: &str = "the radius-2 ball of e is the labelled local picture, with N(c) = {e, (1 2)c, c^2}";
    pub const AUT_GS: &str = "Aut(S_n, S) = <Inn(phi)> with phi = (1 2)(3 n)(4 n-1)...";
    pub const EXCEPTIONAL: &str = "for n = 6 no automorphism of S_6, inner or outer, fixes S except id and Inn(phi)";
    pub const STABILIZER: &str = "the stabilizer of e has order 2 and contains x -> phi^-1 x phi";
    pub const ORDER: &str = "|Aut(Gamma_n)| = 2 n! for 4 <= n <= 8, and 12 for n = 3";
    pub const BRUTEFORCE: &str = "an unrestricted search finds n! * |Aut_e| automorphisms, with the same stabilizer";
    pub const NORMALIZER: &str = "R(S_n) x| Aut(S_n, S) acts by graph automorphisms and is the whole group";
    pub const NORMALITY: &str = "the graph is normal iff every sigma fixing e satisfies sigma(st) = sigma(s) sigma(t) on S";
    pub const ARC: &str = "the stabilizer of e fixes (1 2), so the graph is not arc-transitive";
    pub const PROBE: &str = "x -> phi x preserves adjacency and commutes with right translations and Inn(phi)";
    pub const VERDICT: &str = "Aut(Gamma_n) = R(S_n) x| <Inn(phi)>";
}

/// What a run produces.
pub enum Output {
    Report(Report),
    /// Written verbatim, for `dump-graph`.
    Raw(String),
}

struct Ctx<'a> {
    cli: &'a Cli,
    par: Parallelism,
}

/// Runs one subcommand. Errors are configuration problems; refusals of
/// individual computations become not-applicable claims.
pub fn run(cli: &Cli) -> Result<Output> {
    let par = match cli.opts.workers {
        Some(k) => Parallelism::new(k)?,
        None => Parallelism::available(),
    };
    let ctx = Ctx { cli, par };
    let degrees = cli.opts.degrees()?;
    let mut claims = Vec::new();
    match &cli.command {
        Command::Relations => claims.extend(ctx.relations(&degrees)?),
        Command::DumpGraph => {
            let [n] = degrees[..] else {
                return Err(cayaut::Error::Parse("dump-graph takes a single --n".into()));
            };
            let set = cli.opts.set.build(n)?;
            let graph = CayleyGraph::build_explicit(&set, &cli.opts.graph_options(), &ctx.par)?;
            return Ok(Output::Raw(graph.edge_list()?));
        }
        cmd => {
            for &n in &degrees {
                let set = match cli.opts.set.build(n) {
                    Ok(set) => set,
                    Err(e) => {
                        claims.push(Claim::refused(format!("set:n={n}"), "connection set", e));
                        continue;
                    }
                };
                match cmd {
                    Command::Census => claims.extend(ctx.census(&set)?),
                    Command::Aut { mode } => claims.extend(ctx.aut(&set, *mode)),
                    Command::AutGs => claims.extend(ctx.aut_gs(&set)),
                    Command::Normality => claims.extend(ctx.normality(&set)),
                    Command::VerifyTheorem { claim } => claims.extend(ctx.verify(&set, claim)?),
                    Command::Relations | Command::DumpGraph => unreachable!(),
                }
            }
        }
    }
    Ok(Output::Report(Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: config_echo(cli),
        claims,
    }))
}

fn config_echo(cli: &Cli) -> Value {
    let o = &cli.opts;
    let mut v = json!({
        "command": cli.command.name(),
        "degrees": o.degree_label(),
        "set": o.set.to_string(),
        "length": o.length,
        "anchors": o.anchors,
        "memory": o.memory.to_string(),
        "big": o.big,
    });
    match &cli.command {
        Command::Aut { mode } => v["mode"] = json!(format!("{mode:?}")),
        Command::VerifyTheorem { claim } => v["claim"] = json!(claim),
        _ => {}
    }
    v
}

fn id(name: &str, n: usize) -> String {
    format!("{name}:n={n}")
}

fn perm_list(ps: &[Permutation]) -> Value {
    json!(ps.iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

impl Ctx<'_> {
    fn timed(&self, f: impl FnOnce() -> Claim) -> Claim {
        let start = Instant::now();
        let mut claim = f();
        if self.cli.opts.timings {
            claim.millis = Some(start.elapsed().as_millis() as u64);
        }
        claim
    }

    fn timed_many(&self, f: impl FnOnce() -> Vec<Claim>) -> Vec<Claim> {
        let start = Instant::now();
        let mut claims = f();
        if self.cli.opts.timings {
            let ms = start.elapsed().as_millis() as u64;
            for c in &mut claims {
                c.millis = Some(ms);
            }
        }
        claims
    }

    fn standard(&self) -> bool {
        self.cli.opts.set == SetSpec::Standard
    }

    fn relations(&self, degrees: &[usize]) -> Result<Vec<Claim>> {
        let mut per_word: Vec<[Vec<usize>; 3]> = vec![Default::default(); RELATIONS.len()];
        let start = Instant::now();
        for &n in degrees {
            for (j, check) in check_relations(n)?.into_iter().enumerate() {
                let slot = match check.status {
                    RelationStatus::Holds => 0,
                    RelationStatus::Fails => 1,
                    RelationStatus::NotApplicable => 2,
                };
                per_word[j][slot].push(n);
            }
        }
        let ms = start.elapsed().as_millis() as u64;
        Ok(RELATIONS
            .iter()
            .zip(per_word)
            .enumerate()
            .map(|(j, (&(word, floor), [holds, fails, na]))| {
                let status = if !fails.is_empty() {
                    Status::Fail
                } else if holds.is_empty() {
                    Status::NotApplicable
                } else {
                    Status::Pass
                };
                let summary = format!("{word} = e: holds for {} degrees, fails for {:?}", holds.len(), fails);
                let mut c = Claim::new(
                    format!("relation-{}", j + 1),
                    &format!("{word} = e for n >= {floor}"),
                    status,
                    summary,
                    json!({
                        "word": word,
                        "min_degree": floor,
                        "holds": holds,
                        "fails": fails,
                        "not_applicable": na,
                    }),
                );
                if self.cli.opts.timings {
                    c.millis = Some(ms);
                }
                c
            })
            .collect())
    }

    fn census(&self, set: &GenSet) -> Result<Vec<Claim>> {
        let n = set.degree();
        let length = self.cli.opts.length;
        if let Some(anchors) = self.cli.opts.anchors_for(set)? {
            return Ok(vec![self.timed(|| {
                match enumerate_cycles(set, length, &anchors, &self.par) {
                    Ok(found) => Claim::new(
                        id("census-anchored", n),
                        statement::CENSUS_CUSTOM,
                        Status::Finding,
                        format!("{} cycle(s) of length {length} through {} anchors", found.cycles.len(), anchors.len()),
                        json!({
                            "anchors": perm_list(&anchors),
                            "length": length,
                            "count": found.cycles.len(),
                            "cycles": found.cycles,
                            "paths_explored": found.nodes,
                        }),
                    ),
                    Err(e) => Claim::refused(id("census-anchored", n), statement::CENSUS_CUSTOM, e),
                }
            })]);
        }
        Ok(CaseTag::ALL
            .iter()
            .map(|&case| self.timed(|| self.census_case(set, case)))
            .collect())
    }

    fn census_case(&self, set: &GenSet, case: CaseTag) -> Claim {
        let n = set.degree();
        let length = self.cli.opts.length;
        let name = format!("census-{case}");
        let (stmt, expected) = match case {
            CaseTag::A if n == 12 => (statement::CENSUS_TWELVE, Some(2)),
            CaseTag::A => (statement::CENSUS_A, (n >= 13).then_some(1)),
            CaseTag::BPlus => (statement::CENSUS_B_PLUS, (n >= 13).then_some(2)),
            CaseTag::BMinus => (statement::CENSUS_B_MINUS, (n >= 13).then_some(2)),
        };
        let expected = expected.filter(|_| length == 12 && !self.cli.opts.set.is_custom());
        let anchors = match case.anchors(set) {
            Ok(a) => a,
            Err(e) => return Claim::refused(id(&name, n), stmt, e),
        };
        let found = match enumerate_cycles(set, length, &anchors, &self.par) {
            Ok(f) => f,
            Err(e) => return Claim::refused(id(&name, n), stmt, e),
        };
        let count = found.cycles.len();
        let status = match expected {
            Some(k) => Status::from_bool(count == k),
            None => Status::Finding,
        };
        Claim::new(
            id(&name, n),
            stmt,
            status,
            format!("{count} cycle(s) of length {length} through {}", perm_list(&anchors)),
            json!({
                "anchors": perm_list(&anchors),
                "length": length,
                "count": count,
                "expected": expected,
                "cycles": found.cycles,
                "paths_explored": found.nodes,
            }),
        )
    }

    fn graph(&self, set: &GenSet) -> Result<CayleyGraph> {
        CayleyGraph::build_explicit(set, &self.cli.opts.graph_options(), &self.par)
    }

    fn stabilizer(&self, set: &GenSet) -> std::result::Result<(CayleyGraph, StabilizerResult), String> {
        let graph = self.graph(set).map_err(|e| format!("not computable at budget: {e}"))?;
        let stab = stabilizer_search(&graph, &self.par).map_err(|e| e.to_string())?;
        Ok((graph, stab))
    }

    fn stabilizer_claim(&self, graph: &CayleyGraph, stab: &StabilizerResult) -> Claim {
        let n = graph.degree();
        let phi = Permutation::phi_involution(n).ok();
        let audited: Vec<bool> = stab
            .elements
            .iter()
            .map(|m| m.audit(graph).unwrap_or(false))
            .collect();
        let has_phi = phi.is_some() && stab.elements.iter().any(|m| m.witness == phi);
        let all_audited = audited.iter().all(|&a| a);
        let status = if !all_audited {
            Status::Fail
        } else if self.standard() && n <= 8 {
            Status::from_bool(stab.elements.len() == 2 && has_phi)
        } else if self.standard() && !has_phi {
            Status::Fail
        } else {
            Status::Finding
        };
        let elements: Vec<Value> = stab
            .elements
            .iter()
            .zip(&audited)
            .map(|(m, a)| json!({ "inner_witness": m.witness.as_ref().map(|g| g.to_string()), "audited": a }))
            .collect();
        Claim::new(
            id("stabilizer", n),
            statement::STABILIZER,
            status,
            format!(
                "|Aut_e| = {}, |Aut| = {}, contains Inn(phi): {has_phi}",
                stab.elements.len(),
                stab.aut_order
            ),
            json!({
                "stabilizer_size": stab.elements.len(),
                "aut_order": stab.aut_order as u64,
                "contains_inn_phi": has_phi,
                "elements": elements,
                "search": stab.stats,
                "vertices": graph.vertex_count() as u64,
            }),
        )
    }

    fn aut(&self, set: &GenSet, mode: AutMode) -> Vec<Claim> {
        self.timed_many(|| {
            let n = set.degree();
            let (graph, stab) = match self.stabilizer(set) {
                Ok(x) => x,
                Err(e) => return vec![Claim::refused(id("stabilizer", n), statement::STABILIZER, e)],
            };
            let mut out = vec![self.stabilizer_claim(&graph, &stab)];
            match mode {
                AutMode::StabilizerOnly => {}
                AutMode::Full => {
                    out.push(self.order_claim(n, stab.aut_order));
                    out.push(self.normalizer_claim(&graph, &stab));
                    out.extend(self.normality_claims(&graph, &stab));
                }
                AutMode::BruteforceOracle => out.push(self.bruteforce_claim(&graph, &stab)),
            }
            out
        })
    }

    fn order_claim(&self, n: usize, order: u128) -> Claim {
        let expected = (self.standard() && n <= 8).then(|| 2 * factorial(n));
        let status = match expected {
            Some(k) => Status::from_bool(order == k),
            None => Status::Finding,
        };
        Claim::new(
            id("aut-order", n),
            statement::ORDER,
            status,
            format!("|Aut| = {order}"),
            json!({ "aut_order": order as u64, "expected": expected.map(|k| k as u64) }),
        )
    }

    fn normalizer_claim(&self, graph: &CayleyGraph, stab: &StabilizerResult) -> Claim {
        let n = graph.degree();
        let group = match build_normalizer_group(graph.genset()) {
            Ok(g) => g,
            Err(e) => return Claim::refused(id("normalizer", n), statement::NORMALIZER, e),
        };
        let verified = group.verify(graph, 0, 0).unwrap_or(false);
        let whole = group.order() == stab.aut_order;
        Claim::new(
            id("normalizer", n),
            statement::NORMALIZER,
            if verified { Status::from_bool(whole) } else { Status::Fail },
            format!("order {}, generators audited: {verified}, equals Aut: {whole}", group.order()),
            json!({
                "order": group.order() as u64,
                "inner": perm_list(&group.inner),
                "generators_audited": verified,
                "equals_aut": whole,
            }),
        )
    }

    fn bruteforce_claim(&self, graph: &CayleyGraph, stab: &StabilizerResult) -> Claim {
        let n = graph.degree();
        if graph.vertex_count() > BRUTEFORCE_MAX_VERTICES {
            return Claim::refused(
                id("bruteforce", n),
                statement::BRUTEFORCE,
                format!("brute force needs at most {BRUTEFORCE_MAX_VERTICES} vertices"),
            );
        }
        let brute = match bruteforce_aut_count(graph, &self.par) {
            Ok(b) => b,
            Err(e) => return Claim::refused(id("bruteforce", n), statement::BRUTEFORCE, e),
        };
        let same_stabilizer = brute
            .stabilizer
            .iter()
            .map(|m| m.table())
            .eq(stab.elements.iter().map(|m| m.table()));
        let ok = brute.order == stab.aut_order && same_stabilizer;
        Claim::new(
            id("bruteforce", n),
            statement::BRUTEFORCE,
            Status::from_bool(ok),
            format!("brute force {} vs stabilizer formula {}", brute.order, stab.aut_order),
            json!({
                "bruteforce_order": brute.order as u64,
                "formula_order": stab.aut_order as u64,
                "same_stabilizer": same_stabilizer,
                "uniform_over_images": brute.per_image.iter().all(|&k| k == brute.per_image[0]),
            }),
        )
    }

    fn normality(&self, set: &GenSet) -> Vec<Claim> {
        self.timed_many(|| match self.stabilizer(set) {
            Ok((graph, stab)) => self.normality_claims(&graph, &stab),
            Err(e) => vec![Claim::refused(id("normality", set.degree()), statement::NORMALITY, e)],
        })
    }

    fn normality_claims(&self, graph: &CayleyGraph, stab: &StabilizerResult) -> Vec<Claim> {
        let n = graph.degree();
        let mut out = Vec::new();
        out.push(match normality_from(graph, stab) {
            Ok(v) => {
                let status = if self.standard() && n <= 8 {
                    Status::from_bool(v.normal && v.stabilizer_size == 2 && v.sizes_agree == Some(true))
                } else {
                    Status::Finding
                };
                Claim::new(
                    id("normality", n),
                    statement::NORMALITY,
                    status,
                    format!(
                        "{}: {} of {} products preserved, |Aut_e| = {}, |Aut(S_n,S)| = {:?}",
                        if v.normal { "normal" } else { "not normal" },
                        v.multiplicativity_checks - v.multiplicativity_failures,
                        v.multiplicativity_checks,
                        v.stabilizer_size,
                        v.aut_g_s_size
                    ),
                    serde_json::to_value(&v).expect("verdict serializes"),
                )
            }
            Err(e) => Claim::refused(id("normality", n), statement::NORMALITY, e),
        });
        out.push(match arc_transitivity_check(graph, stab) {
            Ok(a) => Claim::new(
                id("arc-transitivity", n),
                statement::ARC,
                if self.standard() { Status::from_bool(!a.arc_transitive) } else { Status::Finding },
                format!("orbits on N(e): {:?}", a.orbits),
                serde_json::to_value(&a).expect("orbits serialize"),
            ),
            Err(e) => Claim::refused(id("arc-transitivity", n), statement::ARC, e),
        });
        out
    }

    fn aut_gs(&self, set: &GenSet) -> Vec<Claim> {
        let n = set.degree();
        let mut out = vec![self.timed(|| self.aut_gs_claim(set))];
        if n == 6 && self.standard() {
            out.push(self.timed(|| self.exceptional_claim()));
        }
        out
    }

    fn aut_gs_claim(&self, set: &GenSet) -> Claim {
        let n = set.degree();
        let fast = if self.cli.opts.set.is_custom() { None } else { aut_gs_fast(set).ok() };
        let brute = (n <= AUT_GS_BRUTEFORCE_MAX).then(|| aut_gs_bruteforce(set)).and_then(|r| r.ok());
        let Some(found) = fast.as_ref().or(brute.as_ref()) else {
            return Claim::refused(id("aut-gs", n), statement::AUT_GS, "no method applies to this set");
        };
        let agree = match (&fast, &brute) {
            (Some(a), Some(b)) => Some(a == b),
            _ => None,
        };
        let phi = Permutation::phi_involution(n).expect("n >= 3");
        let is_phi_pair = found.len() == 2 && found[0].is_identity() && found[1] == phi;
        let status = if agree == Some(false) {
            Status::Fail
        } else if self.standard() {
            Status::from_bool(is_phi_pair)
        } else {
            Status::Finding
        };
        let show = |v: &Option<Vec<Permutation>>| match v {
            Some(ps) if n <= 64 => perm_list(ps),
            Some(ps) => json!(ps.len()),
            None => Value::Null,
        };
        Claim::new(
            id("aut-gs", n),
            statement::AUT_GS,
            status,
            format!("{} elements, {{e, phi}}: {is_phi_pair}, methods agree: {agree:?}", found.len()),
            json!({
                "count": found.len(),
                "is_identity_and_phi": is_phi_pair,
                "fast": show(&fast),
                "bruteforce": show(&brute),
                "methods_agree": agree,
            }),
        )
    }

    fn exceptional_claim(&self) -> Claim {
        let n = 6;
        match set_preserving_automorphisms(n) {
            Ok(all) => {
                let witnesses: Vec<Option<String>> =
                    all.iter().map(|f| f.inner_witness().map(|g| g.to_string())).collect();
                let ok = all.len() == 2 && witnesses.iter().all(Option::is_some);
                Claim::new(
                    id("aut-gs-exceptional", n),
                    statement::EXCEPTIONAL,
                    Status::from_bool(ok),
                    format!("{} S-preserving automorphisms, inner witnesses {witnesses:?}", all.len()),
                    json!({ "count": all.len(), "inner_witnesses": witnesses }),
                )
            }
            Err(e) => Claim::refused(id("aut-gs-exceptional", n), statement::EXCEPTIONAL, e),
        }
    }

    fn local_claim(&self, n: usize) -> Claim {
        if !self.standard() {
            return Claim::refused(id("local-structure", n), statement::LOCAL, "drawn for the standard set only");
        }
        match verify_local_structure(n) {
            Ok(r) if !r.applicable => Claim::refused(id("local-structure", n), statement::LOCAL, "needs n >= 5"),
            Ok(r) => Claim::new(
                id("local-structure", n),
                statement::LOCAL,
                Status::from_bool(r.pass),
                format!("ball of {} vertices, induced tree: {}", r.ball_size, r.induced_tree),
                serde_json::to_value(&r).expect("report serializes"),
            ),
            Err(e) => Claim::refused(id("local-structure", n), statement::LOCAL, e),
        }
    }

    fn probe_claim(&self, n: usize) -> Claim {
        if !self.standard() {
            return Claim::refused(id("structure-probe", n), statement::PROBE, "defined for the standard set only");
        }
        match structure_probe(n, &self.par) {
            Ok(p) => Claim::new(
                id("structure-probe", n),
                statement::PROBE,
                Status::from_bool(p.left_phi_is_automorphism && p.left_phi_commutes),
                format!(
                    "automorphism: {}, commutes: {}, centre order: {:?}",
                    p.left_phi_is_automorphism, p.left_phi_commutes, p.center_order
                ),
                serde_json::to_value(&p).expect("probe serializes"),
            ),
            Err(e) => Claim::refused(id("structure-probe", n), statement::PROBE, e),
        }
    }

    fn verify(&self, set: &GenSet, filter: &[String]) -> Result<Vec<Claim>> {
        let n = set.degree();
        let wanted = |name: &str| filter.is_empty() || filter.iter().any(|f| name.starts_with(f.as_str()));
        let mut out = Vec::new();
        if wanted("relations") {
            out.push(self.timed(|| match check_relations(n) {
                Ok(checks) => {
                    let failed: Vec<&str> = checks
                        .iter()
                        .filter(|c| c.status == RelationStatus::Fails)
                        .map(|c| c.word.as_str())
                        .collect();
                    Claim::new(
                        id("relations", n),
                        "the five identity words evaluate to e wherever they apply",
                        Status::from_bool(failed.is_empty()),
                        format!("{} failing", failed.len()),
                        serde_json::to_value(&checks).expect("checks serialize"),
                    )
                }
                Err(e) => Claim::refused(id("relations", n), "identity words", e),
            }));
        }
        for case in CaseTag::ALL {
            if wanted(&format!("census-{case}")) {
                out.push(self.timed(|| self.census_case(set, case)));
            }
        }
        if wanted("local-structure") {
            out.push(self.timed(|| self.local_claim(n)));
        }
        if wanted("aut-gs") || wanted("aut-gs-exceptional") {
            out.extend(self.aut_gs(set).into_iter().filter(|c| wanted(c.id.split(':').next().unwrap_or(""))));
        }
        let stab_claims = ["stabilizer", "aut-order", "normalizer", "normality", "arc-transitivity"];
        let needs_stab = stab_claims.iter().any(|c| wanted(c));
        if needs_stab {
            out.extend(self.timed_many(|| match self.stabilizer(set) {
                Ok((graph, stab)) => {
                    let mut claims = vec![self.stabilizer_claim(&graph, &stab)];
                    claims.push(self.order_claim(n, stab.aut_order));
                    if wanted("normalizer") {
                        claims.push(self.normalizer_claim(&graph, &stab));
                    }
                    claims.extend(self.normality_claims(&graph, &stab));
                    claims
                }
                Err(e) => stab_claims
                    .iter()
                    .zip([
                        statement::STABILIZER,
                        statement::ORDER,
                        statement::NORMALIZER,
                        statement::NORMALITY,
                        statement::ARC,
                    ])
                    .map(|(name, stmt)| Claim::refused(id(name, n), stmt, &e))
                    .collect(),
            }));
            out.retain(|c| wanted(c.id.split(':').next().unwrap_or("")));
        }
        if wanted("structure-probe") {
            out.push(self.timed(|| self.probe_claim(n)));
        }
        if wanted("verdict") {
            out.push(verdict(n, &out));
        }
        Ok(out)
    }
}

/// One verdict per degree from the claims already run.
fn verdict(n: usize, claims: &[Claim]) -> Claim {
    let failed: Vec<&str> = claims
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| c.id.as_str())
        .collect();
    let normality = claims.iter().find(|c| c.id == id("normality", n));
    let normal = normality.and_then(|c| c.data.get("normal")).and_then(Value::as_bool);
    let (status, text) = if !failed.is_empty() {
        (Status::Fail, "contradicted".to_string())
    } else {
        match (normal, normality.map(|c| c.status)) {
            (Some(true), Some(Status::Pass)) => (Status::Pass, "normal".to_string()),
            (Some(v), _) => (
                Status::Finding,
                if v { "normal" } else { "not normal" }.to_string(),
            ),
            (None, _) if n >= 13 => (Status::Pass, "consistent with R(S_n) x| <Inn(phi)>".to_string()),
            (None, _) => (Status::NotApplicable, "normality not computed".to_string()),
        }
    };
    Claim::new(
        id("verdict", n),
        statement::VERDICT,
        status,
        text.clone(),
        json!({ "verdict": text, "failed_claims": failed }),
    )
}
