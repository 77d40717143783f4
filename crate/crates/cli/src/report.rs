use std::fmt::Write;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};
use trisection_core::cohomology::{check_serre_duality, h2_routes, hodge_diamond, homology_table};
use trisection_core::complex::HomologyGroup;
use trisection_core::diagram::{builtin_names, validate as check, Trisection, TrisectionDiagram, SYSTEM_NAMES};
use trisection_core::format::diagram_to_json;
use trisection_core::lattice::IntMatrix;
use trisection_core::pairings::{cocycle_class, h2_dual_basis, h3_h1_matrix, intersection_form, H2DualRep, OneOneCocycle};
use trisection_core::spin::{enumerate_spin, spin_torsor_size};
use trisection_core::spinc::{c1_difference, SpinCLedger};
use trisection_core::surface::SurfaceClass;
use trisection_core::Result;

pub struct Report {
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn json_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.json).expect("serialisable");
        s.push('\n');
        s
    }
}

pub struct Header<'a> {
    pub command: &'static str,
    pub input: String,
    pub diagram: &'a TrisectionDiagram,
}

impl Header<'_> {
    fn start(&self) -> (String, Map<String, Value>) {
        let label = self.diagram.label().unwrap_or("(unlabelled)");
        let text = format!("command: {} {}\ndiagram: {label}\ngenus: {}\n", self.command, self.input, self.diagram.genus());
        let mut map = Map::new();
        map.insert("command".into(), json!(self.command));
        map.insert("input".into(), json!(self.input));
        map.insert("diagram".into(), self.diagram.label().map_or(Value::Null, |l| json!(l)));
        map.insert("genus".into(), json!(self.diagram.genus()));
        (text, map)
    }
}

fn num(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("decimal integer"))
}

fn nums(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(num).collect())
}

fn class(x: &SurfaceClass) -> Value {
    nums(&x.0)
}

fn matrix(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| nums(m.row(i))).collect())
}

fn group(h: &HomologyGroup) -> Value {
    json!({ "rank": h.rank, "torsion": nums(&h.torsion), "text": h.to_string() })
}

fn cocycle(x: &OneOneCocycle) -> Value {
    json!({ "b1": class(&x.parts[0]), "b2": class(&x.parts[1]), "b3": class(&x.parts[2]) })
}

fn dual_rep(k: &H2DualRep) -> Value {
    json!({ "a1": class(&k.lifts[0]), "a2": class(&k.lifts[1]), "a3": class(&k.lifts[2]) })
}

fn coords(xs: &[BigInt]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn triple(xs: &[Vec<BigInt>; 3]) -> String {
    format!("({}, {}, {})", coords(&xs[0]), coords(&xs[1]), coords(&xs[2]))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn builtins() -> Report {
    let mut text = String::new();
    for n in builtin_names() {
        writeln!(text, "{n}").unwrap();
    }
    writeln!(text, "(join names with '#' for connected sums, e.g. CP2#CP2bar)").unwrap();
    Report { text, json: json!({ "command": "builtins", "builtins": builtin_names() }) }
}

pub fn show(h: &Header) -> Report {
    let (mut text, mut map) = h.start();
    write!(text, "{}", h.diagram).unwrap();
    map.insert("file".into(), serde_json::from_str(&diagram_to_json(h.diagram)).expect("own output parses"));
    Report { text, json: Value::Object(map) }
}

pub fn validate(h: &Header) -> Report {
    let (mut text, mut map) = h.start();
    let r = check(h.diagram);
    for l in 0..3 {
        writeln!(text, "{}: lagrangian {}, primitive {}", SYSTEM_NAMES[l], yes(r.lagrangian[l]), yes(r.primitive[l]))
            .unwrap();
    }
    for l in 0..3 {
        let n = (l + 1) % 3;
        let tors = if r.pair_torsion[l].is_empty() {
            "torsion-free".to_string()
        } else {
            HomologyGroup { rank: 0, torsion: r.pair_torsion[l].clone() }.to_string()
        };
        writeln!(text, "{}+{}: H1(Sigma)/(L{}+L{}) {tors}", SYSTEM_NAMES[l], SYSTEM_NAMES[n], l + 1, n + 1).unwrap();
    }
    writeln!(text, "valid: {}", yes(r.is_valid())).unwrap();
    if let Some(k) = r.k_values {
        writeln!(text, "k: ({}, {}, {})", k[0], k[1], k[2]).unwrap();
    }
    for f in r.failures() {
        writeln!(text, "failure: {f}").unwrap();
    }
    map.insert("valid".into(), json!(r.is_valid()));
    map.insert(
        "checks".into(),
        json!({
            "lagrangian": r.lagrangian,
            "primitive": r.primitive,
            "pair_torsion": r.pair_torsion.iter().map(|t| nums(t)).collect::<Vec<_>>(),
        }),
    );
    map.insert("k".into(), r.k_values.map_or(Value::Null, |k| json!(k)));
    map.insert("failures".into(), json!(r.failures()));
    Report { text, json: Value::Object(map) }
}

pub fn homology(h: &Header, t: &Trisection) -> Result<Report> {
    let (mut text, mut map) = h.start();
    let table = homology_table(t);
    for (k, g) in table.iter().enumerate() {
        writeln!(text, "H{k} = {g}").unwrap();
    }
    let k = t.k_values();
    let chi: i64 = table.iter().enumerate().map(|(i, g)| if i % 2 == 0 { g.rank as i64 } else { -(g.rank as i64) }).sum();
    let formula = 2 + t.genus() as i64 - k.iter().sum::<usize>() as i64;
    writeln!(text, "k: ({}, {}, {})", k[0], k[1], k[2]).unwrap();
    writeln!(text, "euler characteristic: {chi} (2 + g - k1 - k2 - k3 = {formula})").unwrap();
    let routes = h2_routes(t);
    writeln!(
        text,
        "H2 check: complex {}, dual {}, cech {} -> {}",
        routes.fm,
        routes.dual,
        routes.cech,
        if routes.agree() { "agree" } else { "DISAGREE" }
    )
    .unwrap();
    map.insert("homology".into(), Value::Array(table.iter().map(group).collect()));
    map.insert("k".into(), json!(k));
    map.insert("euler_characteristic".into(), json!(chi));
    map.insert("euler_formula".into(), json!(formula));
    map.insert(
        "h2_check".into(),
        json!({ "complex": group(&routes.fm), "dual": group(&routes.dual), "cech": group(&routes.cech), "agree": routes.agree() }),
    );
    Ok(Report { text, json: Value::Object(map) })
}

pub fn diamond(h: &Header, t: &Trisection) -> Result<Report> {
    let (mut text, mut map) = h.start();
    let d = hodge_diamond(t);
    writeln!(text, "{d}").unwrap();
    let cohomology: Vec<HomologyGroup> = (0..5).map(|k| d.cohomology(k)).collect();
    for (k, g) in cohomology.iter().enumerate() {
        writeln!(text, "H^{k} = {g}").unwrap();
    }
    let serre = check_serre_duality(&d);
    let mismatches: Vec<String> = serre.mismatches.iter().map(|(i, j)| format!("({i},{j})")).collect();
    writeln!(text, "serre symmetry: {}", if serre.passed() { "pass".into() } else { format!("FAIL {}", mismatches.join(" ")) })
        .unwrap();
    map.insert(
        "entries".into(),
        Value::Array((0..3).map(|i| Value::Array((0..3).map(|j| group(d.entry(i, j))).collect())).collect()),
    );
    map.insert("cohomology".into(), Value::Array(cohomology.iter().map(group).collect()));
    map.insert("serre".into(), json!({ "passed": serre.passed(), "mismatches": serre.mismatches }));
    Ok(Report { text, json: Value::Object(map) })
}

pub fn form(h: &Header, t: &Trisection) -> Result<Report> {
    let (mut text, mut map) = h.start();
    let f = intersection_form(t)?;
    let (p, n) = f.signature;
    writeln!(text, "rank: {}", f.rank()).unwrap();
    writeln!(text, "gram: {}", f.gram).unwrap();
    writeln!(text, "determinant: {}", f.determinant).unwrap();
    writeln!(text, "signature: ({p}, {n}), sigma = {}", p as i64 - n as i64).unwrap();
    writeln!(text, "parity: {}", f.parity).unwrap();
    writeln!(text, "unimodular: {}", yes(f.unimodular)).unwrap();
    let m = h3_h1_matrix(t);
    writeln!(text, "h3 x h1 pairing: {} (det {})", m, m.determinant()).unwrap();
    map.insert("rank".into(), json!(f.rank()));
    map.insert("gram".into(), matrix(&f.gram));
    map.insert("determinant".into(), num(&f.determinant));
    map.insert("signature".into(), json!([p, n]));
    map.insert("parity".into(), json!(f.parity.to_string()));
    map.insert("unimodular".into(), json!(f.unimodular));
    map.insert("h3_h1".into(), json!({ "matrix": matrix(&m), "determinant": num(&m.determinant()) }));
    Ok(Report { text, json: Value::Object(map) })
}

pub fn spin(h: &Header, t: &Trisection) -> Result<Report> {
    let (mut text, mut map) = h.start();
    let list = enumerate_spin(t.diagram())?;
    let torsor = spin_torsor_size(t);
    writeln!(text, "spin structures: {}", list.len()).unwrap();
    writeln!(text, "|Hom(H1(X), Z/2)|: {torsor}").unwrap();
    let names: Vec<String> = (1..=t.genus()).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
    if !list.is_empty() {
        writeln!(text, "q on ({}):", names.join(", ")).unwrap();
    }
    for q in &list {
        writeln!(text, "  {q}").unwrap();
    }
    map.insert("count".into(), json!(list.len()));
    map.insert("hom_h1_z2".into(), json!(torsor as u64));
    map.insert("basis".into(), json!(names));
    map.insert(
        "enhancements".into(),
        Value::Array(list.iter().map(|q| json!(q.basis_values().iter().map(|&b| b as u8).collect::<Vec<_>>()))
            .collect()),
    );
    Ok(Report { text, json: Value::Object(map) })
}

fn ledger_json(t: &Trisection, s: &SpinCLedger) -> Value {
    json!({
        "base": s.base_id(),
        "euler": s.euler().iter().map(|e| nums(e)).collect::<Vec<_>>(),
        "twists": s.twists().iter().map(|e| nums(e)).collect::<Vec<_>>(),
        "admissible": s.is_admissible(t),
    })
}

pub fn spinc(h: &Header, t: &Trisection, rep: Option<&H2DualRep>) -> Result<Report> {
    let (mut text, mut map) = h.start();
    let s = SpinCLedger::base(t, "base");
    let reps: Vec<H2DualRep> = match rep {
        Some(k) => vec![k.clone()],
        None => h2_dual_basis(t),
    };
    writeln!(text, "base: e = {} admissible {}", triple(s.euler()), yes(s.is_admissible(t))).unwrap();
    if reps.is_empty() {
        writeln!(text, "H^2(X) has rank 0: no classes act").unwrap();
    }
    let mut steps = Vec::new();
    for (i, k) in reps.iter().enumerate() {
        let s1 = s.act(t, k)?;
        let c1 = c1_difference(t, &s1, &s)?;
        let c1_class = cocycle_class(t, &c1)?;
        writeln!(text, "act {}: A = {k}", i + 1).unwrap();
        writeln!(text, "  e = {} admissible {}", triple(s1.euler()), yes(s1.is_admissible(t))).unwrap();
        writeln!(text, "  c1 difference = {c1}, class {}", coords(&c1_class)).unwrap();
        steps.push(json!({
            "act": dual_rep(k),
            "ledger": ledger_json(t, &s1),
            "c1_difference": { "cocycle": cocycle(&c1), "class": nums(&c1_class) },
        }));
    }
    map.insert("base".into(), ledger_json(t, &s));
    map.insert("steps".into(), Value::Array(steps));
    Ok(Report { text, json: Value::Object(map) })
}
