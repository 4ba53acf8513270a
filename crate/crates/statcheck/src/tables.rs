//! Named reference tables, rendered as canonical ` | `-separated lines.
//!
//! Every table here has a checked-in golden copy; see [`crate::golden`].

use statcheck_core::audit::classify;
use statcheck_core::fock::{fit_statistics, symbolic_partition_function, AlgebraKind, VariableMap};
use statcheck_core::microstates::{microstate_table, MicrostateTable};
use statcheck_core::partitions::enumerate_partitions;
use statcheck_core::scalar::int;
use statcheck_core::symfunc::{kostka_matrix, KostkaTransform, Locus};
use statcheck_core::tensor_lab::{decomposition_table, experiment_names, run_experiment};
use statcheck_core::zoo::{jack_21_symbolic, make_spec, Family, FamilyParams};
use statcheck_core::{AuditVerdict, Side, StatisticsSpec};

use crate::config::family_spec;
use crate::report::{rational_strings, verdict_row};

pub const TABLE_IDS: [&str; 14] = [
    "kostka-3",
    "kostka-4",
    "kostka-5",
    "tbl-gentile",
    "paracount",
    "hilbert-decomp",
    "table-1",
    "gentile-expansions",
    "para-expansions",
    "quon-n3",
    "jack-immanon",
    "semion-n5",
    "wang-n2",
    "hilbert-space-examples",
];

fn row(cells: impl IntoIterator<Item = impl ToString>) -> String {
    cells.into_iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" | ")
}

fn spec(family: Family, n: usize, q: Option<usize>) -> StatisticsSpec {
    let mut p = FamilyParams::new(family, n);
    p.q_or_p = q;
    make_spec(&p).expect("built-in parameters are valid")
}

/// Rows are contents `lambda_J`, columns are shapes `lambda_I`.
pub fn kostka_lines(n: usize) -> Vec<String> {
    let table = enumerate_partitions(n);
    let k = kostka_matrix(n);
    let mut out = vec![row(std::iter::once(String::from("content\\shape")).chain(table.iter().map(|p| p.to_string())))];
    for (j, lambda) in table.iter().enumerate() {
        out.push(row(std::iter::once(lambda.to_string()).chain(k.entries[j].iter().map(|x| x.to_string()))));
    }
    out
}

pub fn microstate_lines(t: &MicrostateTable) -> Vec<String> {
    let mut out = vec![row(["distribution", "type"].into_iter().map(String::from).chain(t.columns.iter().cloned()))];
    for r in &t.rows {
        out.push(row([r.distribution.to_string(), r.occupation_type.to_string()].into_iter().chain(rational_strings(&r.weights))));
    }
    out.push(row([String::from("total"), String::new()].into_iter().chain(rational_strings(&t.totals))));
    out
}

fn gentile_columns() -> Vec<StatisticsSpec> {
    vec![
        spec(Family::Boson, 4, None),
        spec(Family::Fermion, 4, None),
        spec(Family::Gentile, 4, Some(2)),
        spec(Family::Gentile, 4, Some(3)),
        spec(Family::Gentile, 4, Some(4)),
    ]
}

fn para_columns() -> Vec<StatisticsSpec> {
    vec![
        spec(Family::Paraboson, 4, Some(2)),
        spec(Family::Paraboson, 4, Some(3)),
        spec(Family::Paraboson, 4, Some(4)),
        spec(Family::Parafermion, 4, Some(2)),
        spec(Family::Parafermion, 4, Some(3)),
    ]
}

pub fn tbl_gentile() -> Vec<String> {
    microstate_lines(&microstate_table(&gentile_columns(), 4, 10).expect("N matches"))
}

/// Omega weight of each occupation type times the number of distributions of
/// that type, for the parastatistics columns at `N = 4`, `E = 10`.
pub fn paracount() -> Vec<String> {
    let t = microstate_table(&para_columns(), 4, 10).expect("N matches");
    let mut out = vec![row(["type", "distributions"].into_iter().map(String::from).chain(t.columns.iter().cloned()))];
    for lambda in enumerate_partitions(4).iter() {
        let rows: Vec<_> = t.rows.iter().filter(|r| &r.occupation_type == lambda).collect();
        if rows.is_empty() {
            continue;
        }
        out.push(row([lambda.to_string(), rows.len().to_string()].into_iter().chain(rational_strings(&rows[0].weights))));
    }
    out.push(row([String::from("total"), t.rows.len().to_string()].into_iter().chain(rational_strings(&t.totals))));
    out
}

pub fn hilbert_decomp() -> Vec<String> {
    let rows = decomposition_table(5, 6);
    let mut out = vec![row(["partition", "dim S5", "dim U6", "product"])];
    for r in &rows {
        out.push(row([r.partition.to_string(), r.sn_dim.to_string(), r.um_dim.to_string(), r.product.to_string()]));
    }
    out.push(row(["total", "", "", &rows.iter().map(|r| r.product).sum::<u128>().to_string()]));
    out
}

fn fock_verdict(alg: AlgebraKind, n: usize, locus: Locus) -> AuditVerdict {
    fit_statistics(&alg, n, &locus).expect("built-in model fits").verdict
}

/// The verdict rows: families from the zoo plus the two second-quantised
/// models whose statistics are obtained by fitting.
pub fn table_1() -> Vec<String> {
    let zoo = [
        FamilyParams::new(Family::Boson, 4),
        FamilyParams::new(Family::Fermion, 4),
        FamilyParams::new(Family::Gentile, 4).with_q(2),
        FamilyParams::new(Family::Paraboson, 4).with_q(2),
        FamilyParams::new(Family::Parafermion, 4).with_q(2),
        FamilyParams::new(Family::SemionN5, 5),
        FamilyParams::new(Family::MaxwellBoltzmann, 3),
        FamilyParams::new(Family::CappedDistinguishable, 3).with_q(2).with_m_states(4),
        FamilyParams::new(Family::Jack21, 3).with_alpha(int(1)),
        FamilyParams::new(Family::Jack21, 3).with_alpha(int(2)),
        FamilyParams::new(Family::Immanon21, 3),
    ];
    let mut out = vec![row(["statistics", "QM", "SM", "QS", "instance", "violations"])];
    for p in &zoo {
        let r = family_spec(p).expect("built-in parameters are valid");
        out.push(verdict_row(&r.title, &classify(&r.spec)));
    }
    out.push(verdict_row("Biedenharn-Macfarlane", &fock_verdict(AlgebraKind::BmSin { q: 2, s: 1 }, 4, Locus::free(5))));
    out.push(verdict_row("Wang", &fock_verdict(AlgebraKind::WangRMatrix { flavors: 2 }, 2, Locus::blocks(&[2, 2]))));
    out
}

fn both_sides(label: &str, s: &StatisticsSpec) -> Vec<String> {
    let transform = KostkaTransform::new(s.n);
    vec![
        row([label, "m", &s.on_side(Side::Monomial, &transform).to_sympoly().to_string()]),
        row([label, "s", &s.on_side(Side::Schur, &transform).to_sympoly().to_string()]),
    ]
}

pub fn gentile_expansions() -> Vec<String> {
    [2, 3].iter().flat_map(|&q| both_sides(&format!("gentile q={q} N=4"), &spec(Family::Gentile, 4, Some(q)))).collect()
}

pub fn para_expansions() -> Vec<String> {
    let mut out = Vec::new();
    for (family, name) in [(Family::Paraboson, "paraboson"), (Family::Parafermion, "parafermion")] {
        for q in 2..=4 {
            out.extend(both_sides(&format!("{name} p={q} N=4"), &spec(family, 4, Some(q))));
        }
    }
    out
}

pub fn quon_n3() -> Vec<String> {
    let mut out = both_sides("quon N=3", &spec(Family::MaxwellBoltzmann, 3, None));
    let capped = make_spec(&FamilyParams::new(Family::CappedDistinguishable, 3).with_q(2).with_m_states(4)).expect("valid");
    out.extend(both_sides("capped quon q=2 m=4 N=3", &capped));
    out
}

pub fn jack_immanon() -> Vec<String> {
    let jack = jack_21_symbolic();
    let transform = KostkaTransform::new(3);
    let mut out = vec![
        row(["jack (2,1) symbolic", "m", &jack.to_string()]),
        row(["jack (2,1) symbolic", "s", &jack.on_side(Side::Schur, &transform).to_string()]),
    ];
    for alpha in [0, 1, -2] {
        out.extend(both_sides(&format!("jack (2,1) alpha={alpha}"), &jack.at(&int(alpha))));
    }
    out.extend(both_sides("immanon (2,1)", &spec(Family::Immanon21, 3, None)));
    out
}

pub fn semion_n5() -> Vec<String> {
    both_sides("semion N=5", &spec(Family::SemionN5, 5, None))
}

pub fn wang_n2() -> Vec<String> {
    let alg = AlgebraKind::WangRMatrix { flavors: 2 };
    // Orbitals (site, flavour) in the order a1, a2, b1, b2; both flavours of a site share a variable.
    let z = symbolic_partition_function(&alg, 2, 2, &VariableMap::new(vec![0, 0, 1, 1])).expect("valid model");
    let fit = fit_statistics(&alg, 2, &Locus::blocks(&[2, 2])).expect("valid model");
    let omega = fit.spec.on_side(Side::Monomial, &KostkaTransform::new(2));
    vec![
        row(["wang m=2 N=2", "Z", &z.polynomial.to_string()]),
        row(["wang m=2 N=2", "s", &fit.spec.to_sympoly().to_string()]),
        row(["wang m=2 N=2", "m", &omega.to_sympoly().to_string()]),
        row(["wang m=2 N=2", "verdict", &verdict_row("Wang", &fit.verdict)]),
    ]
}

pub fn hilbert_space_examples() -> Vec<String> {
    let mut out = Vec::new();
    for name in experiment_names() {
        let e = run_experiment(name).expect("listed experiment exists");
        for c in &e.claims {
            out.push(row([name, c.description.as_str(), c.observed.as_str()]));
        }
    }
    out
}

/// Regenerates a table; `None` for an unknown id.
pub fn generate(id: &str) -> Option<Vec<String>> {
    let lines = match id {
        "kostka-3" => kostka_lines(3),
        "kostka-4" => kostka_lines(4),
        "kostka-5" => kostka_lines(5),
        "tbl-gentile" => tbl_gentile(),
        "paracount" => paracount(),
        "hilbert-decomp" => hilbert_decomp(),
        "table-1" => table_1(),
        "gentile-expansions" => gentile_expansions(),
        "para-expansions" => para_expansions(),
        "quon-n3" => quon_n3(),
        "jack-immanon" => jack_immanon(),
        "semion-n5" => semion_n5(),
        "wang-n2" => wang_n2(),
        "hilbert-space-examples" => hilbert_space_examples(),
        _ => return None,
    };
    Some(lines)
}
