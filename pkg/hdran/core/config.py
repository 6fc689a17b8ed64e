from pydantic_settings import BaseSettings

# [SETTINGS]
# [Configurações do simulador carregadas de variáveis de ambiente com prefixo HDRAN_ e do arquivo .env]
# [ENTRADA: HDRAN_VERTEX_BUDGET, HDRAN_CLIQUE_BUDGET, HDRAN_REPLICATE_BUDGET, HDRAN_WORKERS, HDRAN_BFS_CHUNK_BYTES, HDRAN_LOG_LEVEL, HDRAN_ENVIRONMENT]
# [SAIDA: instância Settings com limites de recursos e opções de execução validados]
# [DEPENDENCIAS: BaseSettings, pydantic_settings]
class Settings(BaseSettings):
    vertex_budget: int = 50_000
    clique_budget: int = 50_000_000
    replicate_budget: int = 200_000_000
    workers: int = 1
    bfs_chunk_bytes: int = 64 * 1024 * 1024
    log_level: str = "INFO"
    environment: str = "production"

    # [CONFIG]
    # [Configuração interna do Pydantic: prefixo das variáveis e arquivo .env opcional]
    # [ENTRADA: nenhuma - configuração estática]
    # [SAIDA: configuração de carregamento]
    # [DEPENDENCIAS: nenhuma]
    class Config:
        env_prefix = "HDRAN_"
        env_file = ".env"
        extra = "ignore"

    # [GET BFS CHUNK ROWS]
    # [Quantidade de fontes BFS processadas por bloco para caber no orçamento de memória]
    # [ENTRADA: vertex_count - número de vértices da rede]
    # [SAIDA: int - linhas por bloco, no mínimo 1]
    # [DEPENDENCIAS: self.bfs_chunk_bytes]
    def get_bfs_chunk_rows(self, vertex_count: int) -> int:
        return max(1, self.bfs_chunk_bytes // (8 * max(1, vertex_count)))


settings = Settings()
