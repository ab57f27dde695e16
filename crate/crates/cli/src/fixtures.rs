//! Bundled example inputs, also shipped as files under `fixtures/`.

pub const DEX: &str = include_str!("../fixtures/dex.dm");
pub const DCO: &str = include_str!("../fixtures/dco.dm");
pub const DLOOP: &str = include_str!("../fixtures/dloop.dm");
pub const FREE2: &str = include_str!("../fixtures/free2.dm");
pub const BAD: &str = include_str!("../fixtures/bad.dm");
pub const U12_DM: &str = include_str!("../fixtures/u12.dm");
pub const U11: &str = include_str!("../fixtures/u11.mat");
pub const U12: &str = include_str!("../fixtures/u12.mat");
pub const U12_ENVELOPE: &str = include_str!("../fixtures/u12-envelope.mat");
pub const SWAP: &str = include_str!("../fixtures/swap.gf2");

pub const ALL: &[(&str, &str)] = &[
    ("dex.dm", DEX),
    ("dco.dm", DCO),
    ("dloop.dm", DLOOP),
    ("free2.dm", FREE2),
    ("bad.dm", BAD),
    ("u12.dm", U12_DM),
    ("u11.mat", U11),
    ("u12.mat", U12),
    ("u12-envelope.mat", U12_ENVELOPE),
    ("swap.gf2", SWAP),
];

/// Writes every fixture into `dir`.
pub fn write_all(dir: &std::path::Path) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    for (name, text) in ALL {
        std::fs::write(dir.join(name), text)?;
    }
    Ok(())
}
