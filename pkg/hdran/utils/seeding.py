import numpy as np

# Number of uniform draws taken from the generator per evolution block.
RNG_CHUNK = 4096


# [MAKE GENERATOR]
# [Cria o gerador PCG64 do numpy a partir de uma semente de 64 bits via SeedSequence]
# [ENTRADA: seed - inteiro não negativo de até 64 bits]
# [SAIDA: np.random.Generator - reprodutível para uma mesma versão do numpy (faixa fixada em requirements.txt)]
# [DEPENDENCIAS: numpy.random.PCG64, numpy.random.SeedSequence]
def make_generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


# [REPLICATE SEED]
# [Deriva a semente da réplica a partir da semente mestre e do índice, sem estado]
# [ENTRADA: master_seed - semente mestre, index - índice da réplica]
# [SAIDA: int - semente de 64 bits da réplica]
# [DEPENDENCIAS: numpy.random.SeedSequence]
def replicate_seed(master_seed: int, index: int) -> int:
    sequence = np.random.SeedSequence(master_seed, spawn_key=(index,))
    return int(sequence.generate_state(1, np.uint64)[0])
