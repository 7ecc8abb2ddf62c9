//! Reading and writing the four equivalent encodings of a recurrent configuration.

use std::io::Write;

use clap::ValueEnum;
use ferrers_sandpile::io::{from_json, to_json, ConfigRecord, PermRecord, TableauRecord, TreeRecord};
use ferrers_sandpile::{
    Configuration, DecoratedPermutation, DecoratedTableau, EWTableau, FerrersDiagram, IntransitiveTree,
};

use crate::{Failure, Format, Outcome};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Config,
    Tableau,
    Perm,
    Tree,
}

/// Everything is carried as a canonical decorated tableau.
pub struct Object {
    tableau: DecoratedTableau,
}

fn is_json(input: &str) -> bool {
    input.trim_start().starts_with('{')
}

fn parse_decorations(s: &str) -> Result<Vec<u32>, Failure> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::Format(format!("not a decoration: {t:?}"))))
        .collect()
}

fn no_decorations(kind: &str, decorations: Option<&str>) -> Result<(), Failure> {
    match decorations {
        Some(_) => Err(Failure::Format(format!("--decorations does not apply to {kind} input"))),
        None => Ok(()),
    }
}

pub fn read(
    kind: Kind,
    shape: Option<&FerrersDiagram>,
    input: &str,
    decorations: Option<&str>,
) -> Result<Object, Failure> {
    let tableau = match kind {
        Kind::Config => {
            no_decorations("configuration", decorations)?;
            let (d, c) = if is_json(input) {
                from_json::<ConfigRecord>(input)?.decode()?
            } else {
                let d = shape
                    .cloned()
                    .ok_or_else(|| Failure::Format("--shape is required for configuration input".into()))?;
                let c: Configuration = input.parse()?;
                let c = Configuration::for_graph(&d.graph(), c.into_heights())?;
                (d, c)
            };
            d.graph().psi(&c)?
        }
        Kind::Tableau => {
            let mut dt = if is_json(input) {
                DecoratedTableau::try_from(from_json::<TableauRecord>(input)?)?
            } else if input.contains('|') {
                input.parse::<DecoratedTableau>()?
            } else {
                let t = match shape {
                    Some(d) => EWTableau::parse_with_shape(d, input)?,
                    None => input.parse()?,
                };
                DecoratedTableau::undecorated(t)
            };
            if let Some(a) = decorations {
                dt = DecoratedTableau::new(dt.tableau().clone(), parse_decorations(a)?)?;
            }
            if shape.is_some_and(|d| d != dt.tableau().shape()) {
                return Err(Failure::Format(format!("tableau has shape {}", dt.tableau().shape())));
            }
            dt.check_canonical()?;
            dt
        }
        Kind::Perm => {
            let mut dp = if is_json(input) {
                DecoratedPermutation::try_from(from_json::<PermRecord>(input)?)?
            } else {
                input.parse::<DecoratedPermutation>()?
            };
            if let Some(a) = decorations {
                dp = DecoratedPermutation::new(dp.perm().clone(), parse_decorations(a)?)?;
            }
            if let Some(d) = shape {
                EWTableau::from_permutation(dp.perm(), d)?;
            }
            dp.check_canonical()?;
            dp.to_tableau()?
        }
        Kind::Tree => {
            no_decorations("tree", decorations)?;
            let t = if is_json(input) {
                IntransitiveTree::try_from(from_json::<TreeRecord>(input)?)?
            } else {
                input.parse::<IntransitiveTree>()?
            };
            t.to_permutation().to_tableau()?
        }
    };
    Ok(Object { tableau })
}

pub fn write(obj: &Object, kind: Kind, fmt: Format, out: &mut impl Write) -> Outcome {
    let dt = &obj.tableau;
    let shape = dt.tableau().shape();
    let dot_unavailable = || Failure::Format("dot output is only available for graphs and trees".into());
    match kind {
        Kind::Config => {
            let c = dt.to_configuration();
            match fmt {
                Format::Text => writeln!(out, "{c}")?,
                Format::Json => writeln!(out, "{}", to_json(&ConfigRecord::new(shape, &c)))?,
                Format::Dot => return Err(dot_unavailable()),
            }
        }
        Kind::Tableau => match fmt {
            Format::Text => writeln!(out, "{dt}")?,
            Format::Json => writeln!(out, "{}", to_json(&TableauRecord::from(dt)))?,
            Format::Dot => return Err(dot_unavailable()),
        },
        Kind::Perm => {
            let dp = DecoratedPermutation::from_tableau(dt);
            match fmt {
                Format::Text if dp.decorations().iter().all(|&a| a == 0) => writeln!(out, "{}", dp.perm())?,
                Format::Text => writeln!(out, "{dp}")?,
                Format::Json => writeln!(out, "{}", to_json(&PermRecord::from(&dp)))?,
                Format::Dot => return Err(dot_unavailable()),
            }
        }
        Kind::Tree => {
            let t = IntransitiveTree::from_permutation(&DecoratedPermutation::from_tableau(dt))?;
            match fmt {
                Format::Text => writeln!(out, "{t}")?,
                Format::Json => writeln!(out, "{}", to_json(&TreeRecord::from(&t)))?,
                Format::Dot => writeln!(out, "{}", t.to_dot())?,
            }
        }
    }
    Ok(())
}
