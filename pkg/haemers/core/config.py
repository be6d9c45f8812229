from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Linear algebra
    max_cells: int = 1_000_000

    # Graph search caps
    clique_max_vertices: int = 40
    chif_max_vertices: int = 20

    # Representation oracle
    search_node_budget: int = 10**9
    search_max_subspaces: int = 100_000

    # Closed-form evaluators
    theta_precision_digits: int = 40

    # Runtime
    threads: int = 1
    log_level: str = "WARNING"

    class Config:
        env_file = "./.env"
        env_prefix = "haemers_"
        extra = "ignore"


settings = Settings()
