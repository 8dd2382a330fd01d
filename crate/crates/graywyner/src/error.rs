#[derive(Debug, thiserror::Error)]
pub enum GwError {
    #[error("placeholder")]
    Placeholder,
}
