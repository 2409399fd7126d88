mod args;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Parser;
use skewplane::dilation::{check_all_dilations, check_isomorphism, DilationMap};
use skewplane::incidence::{check_affine_axioms, check_desargues, check_pappus, check_pappus_countermodel};
use skewplane::line_algebra::{
    cayley_table, check_aux_independence, check_coordinate_oracle, verify_skewfield, Op, AUX_SAMPLES,
};
use skewplane::report::Case;
use skewplane::witness::{hunt_witnesses, render, WitnessSearch};
use skewplane::{
    AuxPolicy, DivisionRing, GaloisField, Incidence, LineAlgebra, Mode, Plane, Quaternions, Report, Sampling, Status,
};

use args::{Cli, Command, ModeArg, PlaneArgs, SamplingArgs, Suite, VerifyArgs};

const EXIT_SUITE_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

enum AnyPlane {
    Finite(Plane<GaloisField>),
    Quaternion(Plane<Quaternions>),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Cayley { plane, out } => match build_plane(&plane)? {
            AnyPlane::Finite(p) => cayley(&p, &out),
            AnyPlane::Quaternion(_) => bail!("Cayley tables need a finite plane"),
        },
        Command::Verify(args) => match build_plane(&args.plane)? {
            AnyPlane::Finite(p) => verify(&p, &args),
            AnyPlane::Quaternion(p) => verify(&p, &args),
        },
        Command::Witness { plane, sampling, out } => match build_plane(&plane)? {
            AnyPlane::Finite(_) => bail!("witness search needs the quaternion plane"),
            AnyPlane::Quaternion(p) => witness(&p, &sampling, &out),
        },
    }
}

fn build_plane(args: &PlaneArgs) -> Result<AnyPlane> {
    if args.quaternion {
        return Ok(AnyPlane::Quaternion(Plane::new(Quaternions)));
    }
    let text = args.field.as_deref().context("one of --field or --quaternion is required")?;
    let (p, k) = text.split_once(',').with_context(|| format!("--field expects p,k, got {text:?}"))?;
    let p: u64 = p.trim().parse().with_context(|| format!("bad characteristic {p:?}"))?;
    let k: u32 = k.trim().parse().with_context(|| format!("bad degree {k:?}"))?;
    Ok(AnyPlane::Finite(Plane::new(GaloisField::new(p, k)?)))
}

fn require_dir(out: &Path) -> Result<()> {
    if !out.is_dir() {
        bail!("output directory {} does not exist", out.display());
    }
    Ok(())
}

/// Writes through a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, fill: impl FnOnce(&mut BufWriter<&File>) -> Result<()>) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let tmp = tempfile::NamedTempFile::new_in(dir).with_context(|| format!("cannot write in {}", dir.display()))?;
    {
        let mut w = BufWriter::new(tmp.as_file());
        fill(&mut w)?;
        w.flush()?;
    }
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        tmp.as_file().set_permissions(std::fs::Permissions::from_mode(0o644))?;
    }
    tmp.persist(path).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

fn x_axis_algebra<R: DivisionRing>(plane: &Plane<R>) -> Result<LineAlgebra<'_, Plane<R>>> {
    Ok(LineAlgebra::x_axis(plane, AuxPolicy::DeterministicFirst)?)
}

fn cayley<R: DivisionRing>(plane: &Plane<R>, out: &Path) -> Result<u8> {
    require_dir(out)?;
    let k = x_axis_algebra(plane)?;
    for (op, name) in [(Op::Add, "cayley_add.csv"), (Op::Mul, "cayley_mul.csv")] {
        let table = cayley_table(&k, op)?;
        let path = out.join(name);
        write_atomic(&path, |w| Ok(table.write_csv(w)?))?;
        println!("wrote {}", path.display());
    }
    Ok(0)
}

fn sampling(args: &SamplingArgs) -> Result<Sampling> {
    let seed = args.seed.context("--seed is required for sampled runs")?;
    Ok(Sampling::new(seed, args.samples).with_bound(args.rational_bound))
}

fn resolve_mode<R: DivisionRing>(plane: &Plane<R>, args: &VerifyArgs) -> Result<Mode> {
    let finite = plane.ring().is_finite();
    let requested = args.mode.unwrap_or(if finite { ModeArg::Exhaustive } else { ModeArg::Sampled });
    match requested {
        ModeArg::Exhaustive if !finite => bail!("exhaustive mode needs a finite plane"),
        ModeArg::Exhaustive => Ok(Mode::Exhaustive),
        ModeArg::Sampled => Ok(Mode::Sampled(sampling(&args.sampling)?)),
    }
}

fn verify<R: DivisionRing>(plane: &Plane<R>, args: &VerifyArgs) -> Result<u8> {
    let mode = resolve_mode(plane, args)?;
    let dilation = single_dilation(plane, args)?;
    let suites: &[Suite] = match args.suite {
        Suite::All => &[Suite::Axioms, Suite::Desargues, Suite::Pappus, Suite::Skewfield, Suite::DilationIso],
        ref one => std::slice::from_ref(one),
    };
    let mut report = Report::new();
    for suite in suites {
        let part = match suite {
            Suite::Axioms => check_affine_axioms(plane, mode),
            Suite::Desargues => check_desargues(plane, mode),
            Suite::Pappus => match mode {
                // on the quaternion plane the suite asserts a violation
                Mode::Sampled(s) if !plane.ring().is_finite() => check_pappus_countermodel(plane, s),
                _ => check_pappus(plane, mode),
            },
            Suite::PappusCountermodel => match mode {
                Mode::Sampled(s) => check_pappus_countermodel(plane, s),
                Mode::Exhaustive => countermodel_exhaustive(plane),
            },
            Suite::Skewfield => skewfield(plane, mode)?,
            Suite::DilationIso => {
                let k = x_axis_algebra(plane)?;
                match &dilation {
                    Some(d) => check_isomorphism(d, &k, mode),
                    None => check_all_dilations(&k, mode),
                }
            }
            Suite::All => unreachable!("expanded above"),
        };
        report.extend(part);
    }

    print!("{report}");
    if let Some(path) = &args.csv {
        write_atomic(path, |w| Ok(report.write_csv(w)?))?;
    }
    match report.first_failure() {
        None => Ok(0),
        Some(Case { suite, case_id, witness, .. }) => {
            eprintln!("FAILED {suite}/{case_id}: {witness}");
            Ok(EXIT_SUITE_FAILED)
        }
    }
}

fn skewfield<R: DivisionRing>(plane: &Plane<R>, mode: Mode) -> Result<Report> {
    let k = x_axis_algebra(plane)?;
    let mut report = verify_skewfield(&k, mode);
    // one aux pair per AUX_SAMPLES samples
    let aux_mode = match mode {
        Mode::Sampled(s) => Mode::Sampled(Sampling { samples: s.samples.div_ceil(AUX_SAMPLES), ..s }),
        Mode::Exhaustive => Mode::Exhaustive,
    };
    report.extend(check_aux_independence(&k, aux_mode));
    report.extend(check_coordinate_oracle(&k, mode));
    Ok(report)
}

fn countermodel_exhaustive<R: DivisionRing>(plane: &Plane<R>) -> Report {
    let exhaustive = check_pappus(plane, Mode::Exhaustive);
    let case = exhaustive.case("pappus").expect("pappus row");
    let mut report = Report::new();
    match case.status {
        Status::Fail => report.push("pappus", "countermodel", Status::Pass, case.witness.clone(), case.checked),
        _ => report.push(
            "pappus",
            "countermodel",
            Status::Fail,
            format!("plane is Pappian: no violation among {} configurations", case.checked),
            case.checked,
        ),
    }
    report
}

fn keyed<'a>(items: &'a [String], key: &str) -> Result<&'a str> {
    items
        .iter()
        .find_map(|s| s.strip_prefix(key).and_then(|rest| rest.strip_prefix('=')))
        .with_context(|| format!("missing {key}=x,y"))
}

fn single_dilation<'g, R: DivisionRing>(
    plane: &'g Plane<R>,
    args: &VerifyArgs,
) -> Result<Option<DilationMap<'g, Plane<R>>>> {
    let point = |items: &[String], key: &str| -> Result<_> {
        let text = keyed(items, key)?;
        plane.parse_point(text).with_context(|| format!("bad point {key}={text}"))
    };
    if let Some(items) = &args.homothety {
        let map = DilationMap::homothety(plane, point(items, "V")?, point(items, "P")?, point(items, "P'")?)?;
        return Ok(Some(map));
    }
    if let Some(items) = &args.translation {
        return Ok(Some(DilationMap::translation(plane, point(items, "P")?, point(items, "P'")?)?));
    }
    Ok(None)
}

fn witness<R: DivisionRing>(plane: &Plane<R>, args: &SamplingArgs, out: &Path) -> Result<u8> {
    require_dir(out)?;
    let s = sampling(args)?;
    let k = x_axis_algebra(plane)?;
    match hunt_witnesses(&k, s) {
        WitnessSearch::Found(w) => {
            let text = render(&k, &w);
            let path = out.join("witness.txt");
            write_atomic(&path, |f| Ok(f.write_all(text.as_bytes())?))?;
            print!("{text}");
            println!("wrote {}", path.display());
            Ok(0)
        }
        WitnessSearch::Exhausted { missing, samples } => {
            eprintln!("budget exhausted: no {missing} within {samples} samples");
            Ok(EXIT_BUDGET)
        }
    }
}
