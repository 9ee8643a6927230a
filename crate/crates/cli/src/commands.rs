use std::sync::Arc;

use hochlift::complexes::{cohomology_basis, is_cocycle, verify_exactness, Cochain, FreeBimoduleComplex};
use hochlift::example::WorkedExample;
use hochlift::foundations::{Bicharacter, GradingGroup};
use hochlift::lifting::{bracket, cup, solve_homotopy_lifting, verify_homotopy_lifting, Resolution};
use hochlift::oracle::oracle_check;
use hochlift::twist::{twisted_tensor_resolution, verify_factorization, FactorizationOptions, TwistedTensorResolution};

use crate::problem::{InputError, ProblemFile, TaskKind};
use crate::{CliError, Report};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    /// Parse, check the algebra axioms, complexes, bicharacter and cochains.
    Validate { canonical: bool },
    /// Certify every resolution in the file.
    Resolve,
    Cohomology { degree: usize },
    Cup,
    Bracket,
    Lift,
    /// Build P⊗ᵗQ from the first two algebras and certify it.
    TwistBuild { twist: Option<String> },
    VerifyIso { max_degree: usize, twist: Option<String> },
    OracleCheck { max_degree: usize },
    ExamplePaper,
}

fn compute(e: impl std::fmt::Display) -> CliError {
    CliError::Compute(e.to_string())
}

fn at(line: usize, message: impl Into<String>) -> CliError {
    CliError::Input(InputError { line, column: 1, message: message.into() })
}

pub fn run(cmd: &Command, problem: Option<&ProblemFile>) -> Result<Report, CliError> {
    let mut report = Report::default();
    if *cmd == Command::ExamplePaper {
        let ex = WorkedExample::new(6).map_err(compute)?;
        report.absorb(&ex.run().map_err(compute)?.to_string());
        return Ok(report);
    }
    let file = problem.ok_or_else(|| CliError::Usage("this command needs a problem file".into()))?;
    match cmd {
        Command::Validate { canonical } => validate(file, *canonical, &mut report)?,
        Command::Resolve => {
            for a in file.algebras.iter().filter(|a| a.resolution.is_some()) {
                let p = a.complex(2)?;
                let ranks: Vec<String> = (0..=p.length()).map(|n| p.rank(n).to_string()).collect();
                report.info(format!("# {}: ranks {}", a.name, ranks.join(" ")));
                let ex = verify_exactness(&p, p.length() - 1).map_err(compute)?;
                report.check(ex.exact(), format!("resolution {}: {ex}", a.name));
            }
        }
        Command::Cohomology { degree } => {
            for a in file.algebras.iter().filter(|a| a.resolution.is_some()) {
                let p = a.complex(degree + 1)?;
                let basis = cohomology_basis(&p, *degree).map_err(compute)?;
                report.info(format!("HH^{degree}({}) has dimension {}", a.name, basis.dim()));
                for (k, (c, v)) in basis.classes.iter().zip(&basis.internal_degrees).enumerate() {
                    report.info(format!("  [{k}] internal {v}: {}", c.format(&p)));
                }
            }
        }
        Command::Cup | Command::Bracket | Command::Lift => tasks(file, cmd, &mut report)?,
        Command::TwistBuild { twist } => {
            let tt = twisted(file, twist.as_deref(), 4)?;
            let t = tt.resolution().complex();
            for n in 0..=t.length() {
                let names: Vec<&str> = (0..t.rank(n)).map(|g| t.gen_name(n, g)).collect();
                report.info(format!("degree {n} rank {}: {}", t.rank(n), names.join(" ")));
            }
            let ex = verify_exactness(t, t.length() - 1).map_err(compute)?;
            report.check(ex.exact(), format!("total complex {}: {ex}", t.algebra().labels().join(",")));
        }
        Command::VerifyIso { max_degree, twist } => {
            let tt = twisted(file, twist.as_deref(), 2 * max_degree + 1)?;
            let r = verify_factorization(&tt, *max_degree, FactorizationOptions::default()).map_err(compute)?;
            report.absorb(&r.to_string());
        }
        Command::OracleCheck { max_degree } => {
            for a in file.algebras.iter().filter(|a| a.resolution.is_some()) {
                let res = Resolution::new(a.complex(max_degree + 3)?).map_err(compute)?;
                report.info(format!("# algebra {}", a.name));
                report.absorb(&oracle_check(&res, *max_degree).map_err(compute)?.to_string());
            }
        }
        Command::ExamplePaper => unreachable!(),
    }
    Ok(report)
}

fn validate(file: &ProblemFile, canonical: bool, report: &mut Report) -> Result<(), CliError> {
    report.check(true, "parse");
    for a in &file.algebras {
        let v = a.algebra.validate();
        report.check(v.passed(), format!("algebra {}: associative, unital, graded", a.name));
        if a.resolution.is_some() {
            let p = a.complex(0)?;
            report.check(p.validate().passed(), format!("resolution {}: {}", a.name, p.validate()));
        }
    }
    if file.bicharacter.is_some() {
        match file.algebras.as_slice() {
            [a, b, ..] => {
                file.bicharacter(&a.algebra, &b.algebra)?;
                report.check(true, format!("bicharacter on {} and {}", a.name, b.name));
            }
            _ => return Err(at(file.bicharacter.as_ref().map_or(1, |b| b.1), "a bicharacter needs two algebras")),
        }
    }
    for (k, c) in file.cochains.iter().enumerate() {
        let p = file.algebras[c.algebra].complex(c.degree + 1)?;
        let f = file.cochain(k, &p)?;
        report.check(is_cocycle(&p, &f).map_err(compute)?, format!("cochain {}: cocycle", c.name));
    }
    if canonical {
        report.info("--- canonical");
        for l in file.canonical().lines() {
            report.info(l);
        }
    }
    Ok(())
}

fn tasks(file: &ProblemFile, cmd: &Command, report: &mut Report) -> Result<(), CliError> {
    for task in &file.tasks {
        let cochain = |k: usize| &file.cochains[k];
        let same = |a: usize, b: usize| -> Result<(), CliError> {
            if cochain(a).algebra != cochain(b).algebra {
                return Err(at(task.line, "both cochains must live on the same algebra"));
            }
            Ok(())
        };
        let resolution = |k: usize, len: usize| -> Result<(Resolution, Arc<FreeBimoduleComplex>), CliError> {
            let p = file.algebras[cochain(k).algebra].complex(len)?;
            Ok((Resolution::new(p.clone()).map_err(compute)?, p))
        };
        let coordinates = |p: &FreeBimoduleComplex, f: &Cochain| -> Result<String, CliError> {
            let basis = cohomology_basis(p, f.degree()).map_err(compute)?;
            Ok(match basis.coordinates(f) {
                Some(c) => c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
                None => "not a cocycle".into(),
            })
        };
        match (&task.kind, cmd) {
            (&TaskKind::Cup(a, b), Command::Cup) => {
                same(a, b)?;
                let len = cochain(a).degree + cochain(b).degree + 1;
                let (res, p) = resolution(a, len)?;
                let (f, g) = (file.cochain(a, &p)?, file.cochain(b, &p)?);
                let c = cup(&res, &f, &g).map_err(compute)?;
                let name = format!("{} ⌣ {}", cochain(a).name, cochain(b).name);
                report.info(format!("{name} = {}", c.format(&p)));
                report.info(format!("{name} class coordinates: {}", coordinates(&p, &c)?));
                report.check(is_cocycle(&p, &c).map_err(compute)?, format!("{name} is a cocycle"));
            }
            (&TaskKind::Bracket(a, b), Command::Bracket) => {
                same(a, b)?;
                let len = cochain(a).degree + cochain(b).degree + 2;
                let (res, p) = resolution(a, len)?;
                let (f, g) = (file.cochain(a, &p)?, file.cochain(b, &p)?);
                let lf = solve_homotopy_lifting(&res, &f).map_err(compute)?;
                let lg = solve_homotopy_lifting(&res, &g).map_err(compute)?;
                for (k, l) in [(a, &lf), (b, &lg)] {
                    let v = verify_homotopy_lifting(&res, &l.cocycle, &l.map, false);
                    report.check(v.passed(), format!("lifting of {} verified", cochain(k).name));
                }
                let br = bracket(&res, &lf.cocycle, &lf.map, &lg.cocycle, &lg.map).map_err(compute)?;
                let name = format!("[{}, {}]", cochain(a).name, cochain(b).name);
                report.info(format!("{name} = {}", br.format(&p)));
                report.info(format!("{name} class coordinates: {}", coordinates(&p, &br)?));
                report.check(is_cocycle(&p, &br).map_err(compute)?, format!("{name} is a cocycle"));
            }
            (&TaskKind::Lift(a), Command::Lift) => {
                let (res, p) = resolution(a, cochain(a).degree + 3)?;
                let f = file.cochain(a, &p)?;
                let l = solve_homotopy_lifting(&res, &f).map_err(compute)?;
                let name = &cochain(a).name;
                for n in l.map.start..l.map.images.len() {
                    let m = (n as isize + l.map.shift) as usize;
                    for (g, x) in l.map.images[n].iter().enumerate() {
                        report.info(format!("psi_{name}({}) = {}", p.gen_name(n, g), p.format_element(m, x)));
                    }
                }
                let v = verify_homotopy_lifting(&res, &l.cocycle, &l.map, false);
                report.check(v.passed(), format!("psi_{name} satisfies the lifting equation"));
            }
            _ => {}
        }
    }
    Ok(())
}

/// P⊗ᵗQ on the first two algebras, each factor of length ≥ `len`.
fn twisted(file: &ProblemFile, twist: Option<&str>, len: usize) -> Result<TwistedTensorResolution, CliError> {
    let [a, b, ..] = file.algebras.as_slice() else {
        return Err(CliError::Usage("twisting needs two algebras in the problem file".into()));
    };
    let t = match twist {
        Some(q) => {
            let q = file.field.parse(q).map_err(|e| CliError::Usage(format!("--twist: {e}")))?;
            let z = GradingGroup::integers();
            if *a.algebra.group() != z || *b.algebra.group() != z {
                return Err(CliError::Usage("--twist needs both algebras graded by Z".into()));
            }
            Bicharacter::on_integers(file.field, q).map_err(|e| CliError::Usage(format!("--twist: {e}")))?
        }
        None => file.bicharacter(&a.algebra, &b.algebra)?,
    };
    let left = Arc::new(Resolution::new(a.complex(len)?).map_err(compute)?);
    let right = Arc::new(Resolution::new(b.complex(len)?).map_err(compute)?);
    twisted_tensor_resolution(left, right, t).map_err(compute)
}
