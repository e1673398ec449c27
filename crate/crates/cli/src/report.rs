//! Line-oriented `key = value` reports with `[section]` headers.

use std::fmt::{Display, Write};

use leonard_core::analysis::{CounterexampleReport, InstanceAnalysis};
use leonard_core::FieldElement;

fn list<T: Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

struct Out(String);

impl Out {
    fn section(&mut self, name: &str) {
        writeln!(self.0, "[{name}]").unwrap();
    }

    fn kv(&mut self, key: impl Display, value: impl Display) {
        writeln!(self.0, "{key} = {value}").unwrap();
    }
}

pub fn analysis_report(a: &InstanceAnalysis) -> String {
    let mut out = Out(String::new());
    out.section("spec");
    for line in a.spec.to_text().lines() {
        writeln!(out.0, "{line}").unwrap();
    }

    out.section("array");
    out.kv("theta", list(a.array.theta()));
    out.kv("theta_star", list(a.array.theta_star()));
    out.kv("phi", list(a.array.phi()));
    out.kv("phi2", list(a.array.phi2()));

    out.section("intersection");
    out.kv("a", list(&a.numbers.a));
    out.kv("b", list(&a.numbers.b));
    out.kv("c", list(&a.numbers.c));

    out.section("zero_diagonal");
    out.kv("m", &a.z.m);
    out.kv("t", &a.z.t);
    out.kv("l", &a.z.l);
    out.kv("a_minus", list(&a.apm.a_minus));
    out.kv("a_plus", list(&a.apm.a_plus));
    out.kv("rank_m", a.z.rank_m);
    out.kv("dim_z", a.z.dim_z);
    for (k, (f, x)) in a.z.coeff_basis.iter().zip(&a.z.matrix_basis).enumerate() {
        out.kv(format_args!("basis.{k}.coefficients"), f);
        out.kv(format_args!("basis.{k}.matrix"), x);
    }
    if let Some(row) = &a.relation {
        out.kv("relation", &row.label);
        out.kv("relation.minus_coeff", &row.minus_coeff);
        out.kv("relation.plus_coeff", &row.plus_coeff);
    }
    for (k, x) in a.closed_basis.iter().enumerate() {
        out.kv(format_args!("closed_basis.{k}"), x);
    }

    out.section("predicates");
    let p = &a.predicates;
    out.kv("z_nonzero", p.z_nonzero);
    out.kv("dim2", p.dim2);
    out.kv("self_dual", p.self_dual);
    out.kv("spin", p.spin);
    out.kv("condition", p.condition.as_deref().unwrap_or("none"));

    out.section("checks");
    for c in &a.checks {
        let verdict = if c.passed { "pass" } else { "FAIL" };
        match &c.detail {
            Some(detail) => out.kv(c.name, format_args!("{verdict} ({detail})")),
            None => out.kv(c.name, verdict),
        }
    }
    out.kv("pi2_witnesses", a.pi2.len());
    out.kv("status", if a.all_passed() { "ok" } else { "inconsistent" });
    out.0
}

fn row(values: &[FieldElement]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn counterexample_report(r: &CounterexampleReport) -> String {
    let mut out = Out(String::new());
    out.section("counterexample");
    out.kv("a", &r.a);
    out.kv("a_star", &r.a_star);
    for (i, e) in r.e.iter().enumerate() {
        out.kv(format_args!("E{i}"), e);
    }
    for (i, e) in r.e_star.iter().enumerate() {
        out.kv(format_args!("E*{i}"), e);
        out.kv(format_args!("E*{i}.row0"), row(e.row(0)));
    }
    out.kv("idempotents_match", "yes");
    out.kv("vanishing_pattern_pairs", r.pattern_pairs);

    out.section("forms");
    for f in &r.forms {
        let (i, j) = f.entry;
        out.kv(format_args!("form.({i},{j})"), &f.computed);
        out.kv(format_args!("form.({i},{j}).scale"), &f.scale);
    }

    out.section("span");
    out.kv("g0*g0star in linear span of forms", yes_no(r.linear_span));
    writeln!(
        out.0,
        "g0*g0star in span: yes (g{}star * g0 g0star in span of gstar_m * forms)",
        r.multiplier
    )
    .unwrap();
    out.kv("status", "ok");
    out.0
}
