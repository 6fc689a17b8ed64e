from typing import List, Optional

from pydantic import BaseModel, Field, field_validator

MAX_SEED = 2**64 - 1

WIENER_DEFAULT_N = 500
WIENER_DEFAULT_REPS = 200
WIENER_LONG_N = 2000
WIENER_LONG_REPS = 500


# [INDEX PARAMS]
# [Base dos parâmetros de comando com índice k validado]
# [ENTRADA: k - índice da rede]
# [SAIDA: instância validada]
# [DEPENDENCIAS: BaseModel, field_validator]
class IndexParams(BaseModel):
    k: int

    # [VALIDATE K]
    # [Validador de campo para garantir k >= 3]
    # [ENTRADA: v - valor do campo k]
    # [SAIDA: int - valor validado ou ValueError]
    # [DEPENDENCIAS: field_validator]
    @field_validator("k")
    @classmethod
    def validate_k(cls, v):
        if v < 3:
            raise ValueError(f"k must be at least 3, got {v}")
        return v


class GenerateParams(IndexParams):
    n: int = Field(ge=0, description="Number of evolution steps")
    seed: int = Field(ge=0, le=MAX_SEED, description="64-bit generator seed")
    out: str


class StatsParams(BaseModel):
    input_path: str
    out_prefix: str
    distances: bool = False
    sources: Optional[int] = Field(default=None, ge=1, description="Sampled BFS sources; exact when omitted")


class TheoryParams(IndexParams):
    n: int = Field(ge=1)
    out: Optional[str] = None
    j_max: Optional[int] = Field(default=None, ge=3)


# [EXPERIMENT PARAMS]
# [Parâmetros comuns dos experimentos Monte Carlo]
# [ENTRADA: n - passos, reps - réplicas, seed - semente mestre, long_run - libera o orçamento]
# [SAIDA: instância validada]
# [DEPENDENCIAS: IndexParams, Field]
class ExperimentParams(IndexParams):
    n: int = Field(ge=1)
    reps: int = Field(ge=1)
    seed: int = Field(default=0, ge=0, le=MAX_SEED)
    long_run: bool = False


class ValidateParams(ExperimentParams):
    out: Optional[str] = None
    degree_rows: int = Field(default=10, ge=1)


# [WIENER STUDY PARAMS]
# [Parâmetros do estudo de Wiener; n e reps omitidos seguem a escala padrão ou a escala longa]
# [ENTRADA: k, n, reps, seed, long_run, out_prefix]
# [SAIDA: instância validada com n e reps resolvidos]
# [DEPENDENCIAS: IndexParams]
class WienerStudyParams(IndexParams):
    n: Optional[int] = Field(default=None, ge=1)
    reps: Optional[int] = Field(default=None, ge=20)
    seed: int = Field(default=0, ge=0, le=MAX_SEED)
    long_run: bool = False
    out_prefix: str = "wiener_"

    # [RESOLVED N]
    # [n efetivo do estudo: explícito, ou o padrão curto/longo]
    # [ENTRADA: nenhuma]
    # [SAIDA: int]
    # [DEPENDENCIAS: WIENER_DEFAULT_N, WIENER_LONG_N]
    def resolved_n(self) -> int:
        if self.n is not None:
            return self.n
        return WIENER_LONG_N if self.long_run else WIENER_DEFAULT_N

    # [RESOLVED REPS]
    # [Réplicas efetivas do estudo: explícitas, ou o padrão curto/longo]
    # [ENTRADA: nenhuma]
    # [SAIDA: int]
    # [DEPENDENCIAS: WIENER_DEFAULT_REPS, WIENER_LONG_REPS]
    def resolved_reps(self) -> int:
        if self.reps is not None:
            return self.reps
        return WIENER_LONG_REPS if self.long_run else WIENER_DEFAULT_REPS


class LorenzParams(BaseModel):
    ks: List[int] = Field(min_length=1)
    n: int = Field(ge=1)
    reps: int = Field(ge=1)
    seed: int = Field(default=0, ge=0, le=MAX_SEED)
    long_run: bool = False
    svg: Optional[str] = None
    out: Optional[str] = None

    # [VALIDATE KS]
    # [Validador de campo para garantir k >= 3 em todos os índices pedidos]
    # [ENTRADA: v - lista de índices]
    # [SAIDA: List[int] - valor validado ou ValueError]
    # [DEPENDENCIAS: field_validator]
    @field_validator("ks")
    @classmethod
    def validate_ks(cls, v):
        small = [k for k in v if k < 3]
        if small:
            raise ValueError(f"k must be at least 3, got {small}")
        return v


class ConcentrationParams(ExperimentParams):
    j: int
    points: int = Field(default=20, ge=2)
    out: Optional[str] = None

    # [VALIDATE J]
    # [Validador de campo para garantir j >= k]
    # [ENTRADA: v - grau, info - dados já validados (k)]
    # [SAIDA: int - valor validado ou ValueError]
    # [DEPENDENCIAS: field_validator, ValidationInfo]
    @field_validator("j")
    @classmethod
    def validate_j(cls, v, info):
        k = info.data.get("k")
        if k is not None and v < k:
            raise ValueError(f"degree j must be at least k={k}, got {v}")
        return v
