//! Game sessions, transcripts, self-play, the HTTP service and the CLI on
//! top of `xmcts-core`.

pub mod cli;
pub mod selfplay;
pub mod server;
pub mod session;
pub mod transcript;
