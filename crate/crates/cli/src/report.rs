//! Plain-text renderings.

use kgen_core::amalgam::{Certificate, KRecord};
use kgen_core::rep::HFormReport;
use kgen_core::{Matrix2, ZPoly};
use num_bigint::BigInt;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn rho_text(m: &Matrix2<ZPoly>, h: &HFormReport<BigInt>, det_one: bool) -> String {
    let mut out = format!("rho = {m}\nP1 = {}\nQ1 = {}\nQ2 = {}\nP2 = {}\ndet = 1: {}\n", h.p1, h.q1, h.q2, h.p2, yes(det_one));
    if h.all_balanced() {
        out.push_str("balanced: yes ×4");
    } else {
        out.push_str(&format!("balanced: no ({})", h.unbalanced().join(", ")));
    }
    out
}

fn record_line(r: &KRecord) -> String {
    let rho = r.rho.as_ref().map(|m| format!("[[{}, {}], [{}, {}]]", m.a, m.b, m.c, m.d)).unwrap_or_else(|| "unavailable".into());
    let status = if r.passed() { "ok" } else { "FAILED" };
    format!("k = {:>3}  {status:<6}  rho = {rho}", r.k)
}

pub fn certificate_text(c: &Certificate) -> String {
    let mut lines = vec![format!("certificate for genus {}, k = 1..{}", c.genus, c.kmax)];
    lines.extend(c.records.iter().map(record_line));
    let distinct = c.pairwise.iter().filter(|p| p.distinct).count();
    lines.push(format!("double cosets distinct: {distinct} of {} pairs", c.pairwise.len()));
    lines.push(format!("verdict: {}", if c.verdict { "pass" } else { "FAIL" }));
    lines.join("\n")
}

pub fn failure_text(c: &Certificate) -> String {
    let mut parts = Vec::new();
    for r in c.failing_records() {
        let m = &r.memberships;
        let mut why = Vec::new();
        if !r.conjugation_ok {
            why.push("rho differs from M_k N M_k^-1".to_string());
        }
        for (name, bad) in [
            ("M_k not in A", !m.mk_in_a),
            ("M_k in U", m.mk_in_u),
            ("N not in B", !m.n_in_b),
            ("N in U", m.n_in_u),
            ("det != 1", !m.rho_det_one),
            ("not balanced", !m.rho_balanced),
            ("twist action disagrees", !m.twist_consistent),
            ("W not trivial after specializing", !m.w_trivial),
        ] {
            if bad {
                why.push(name.to_string());
            }
        }
        parts.push(format!("record k = {}: {}", r.k, why.join("; ")));
    }
    for p in c.pairwise.iter().filter(|p| !p.distinct) {
        parts.push(format!("pair ({}, {}) not separated", p.k, p.l));
    }
    format!("verification failed\n{}", parts.join("\n"))
}

pub fn recheck_text(c: &Certificate, problems: &[String]) -> String {
    if problems.is_empty() {
        format!("stored certificate (genus {}, kmax {}) checks out", c.genus, c.kmax)
    } else {
        format!("{} problem(s):\n{}", problems.len(), problems.join("\n"))
    }
}
