import json
import logging
from pathlib import Path
from typing import List, Union

from pydantic import ValidationError as PydanticValidationError

from hdran.core.exceptions import NetworkFileException, ValidationException
from hdran.models.network import Network
from hdran.schemas.network_file import SCHEMA_VERSION, ActiveCliqueEntry, NetworkFile
from hdran.validators.base_validator import LineMap
from hdran.validators.network_validator import NetworkFileValidator

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


# [NETWORK REPOSITORY]
# [Persistência de redes no formato textual canônico (JSON com uma aresta ou clique por linha)]
# [ENTRADA: nenhuma]
# [SAIDA: instância NetworkRepository]
# [DEPENDENCIAS: json, NetworkFile, NetworkFileValidator]
class NetworkRepository:

    # [TO FILE]
    # [Converte a rede no modelo NetworkFile: arestas ordenadas e cliques ativas em ordem de arena]
    # [ENTRADA: net - Network]
    # [SAIDA: NetworkFile]
    # [DEPENDENCIAS: Network.edges, Network.active_cliques]
    def to_file(self, net: Network) -> NetworkFile:
        return NetworkFile(
            schema_version=SCHEMA_VERSION,
            k=net.index_k,
            n=net.time_n,
            seed=net.seed,
            edges=list(net.edges()),
            active_cliques=[ActiveCliqueEntry(vertices=list(members), depth=depth) for members, depth in net.active_cliques()],
        )

    # [SERIALIZE]
    # [Texto canônico: cabeçalho, uma aresta por linha e uma clique por linha]
    # [ENTRADA: net - Network]
    # [SAIDA: str]
    # [DEPENDENCIAS: json.dumps]
    def serialize(self, net: Network) -> str:
        data = self.to_file(net)
        lines = [
            "{",
            f'  "schema_version": {data.schema_version},',
            f'  "k": {data.k},',
            f'  "n": {data.n},',
            f'  "seed": {json.dumps(data.seed)},',
            '  "edges": [',
        ]
        lines.extend(self._join_items([f"    [{u}, {v}]" for u, v in data.edges]))
        lines.append("  ],")
        lines.append('  "active_cliques": [')
        lines.extend(
            self._join_items(
                [f'    {{"vertices": {json.dumps(entry.vertices)}, "depth": {entry.depth}}}' for entry in data.active_cliques]
            )
        )
        lines.append("  ]")
        lines.append("}")
        return "\n".join(lines) + "\n"

    # [SAVE NETWORK]
    # [Grava a rede no formato canônico]
    # [ENTRADA: net - rede, path - destino]
    # [SAIDA: None - arquivo gravado]
    # [DEPENDENCIAS: self.serialize, pathlib.Path]
    def save_network(self, net: Network, path: PathLike):
        Path(path).write_text(self.serialize(net), encoding="utf-8")
        logger.info(f"Saved {net!r} to {path}")

    # [LOAD NETWORK]
    # [Lê, valida todas as invariantes e reconstrói a rede; erros trazem contexto de linha]
    # [ENTRADA: path - caminho do arquivo]
    # [SAIDA: Network sem estado de gerador]
    # [DEPENDENCIAS: self.parse]
    def load_network(self, path: PathLike) -> Network:
        text = Path(path).read_text(encoding="utf-8")
        net = self.parse(text)
        logger.info(f"Loaded {net!r} from {path}")
        return net

    # [PARSE]
    # [Decodifica o texto, valida o esquema e as invariantes e monta a Network]
    # [ENTRADA: text - conteúdo do arquivo]
    # [SAIDA: Network]
    # [DEPENDENCIAS: json.loads, NetworkFile.model_validate, NetworkFileValidator, ValidationException]
    def parse(self, text: str) -> Network:
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise NetworkFileException(f"malformed network file: {e.msg}", line=e.lineno) from e
        line_map = self._line_map(text)
        try:
            data = NetworkFile.model_validate(raw)
        except PydanticValidationError as e:
            raise ValidationException(self._schema_errors(e, line_map), message="Network file does not match the schema") from e

        result = NetworkFileValidator(line_map).validate(data)
        if not result.is_valid:
            raise ValidationException(result.get_errors_by_field(), message=f"Network file validation failed: {result.summary()}")
        return self._build(data)

    def _build(self, data: NetworkFile) -> Network:
        net = Network(data.k, seed=data.seed)
        net.time_n = data.n
        net.adjacency = [[] for _ in range(data.k + data.n)]
        for u, v in data.edges:
            net.adjacency[u].append(v)
            net.adjacency[v].append(u)
        for neighbors in net.adjacency:
            neighbors.sort()
        for index, entry in enumerate(data.active_cliques):
            net.clique_vertices.append(tuple(sorted(entry.vertices)))
            net.clique_depth.append(entry.depth)
            net.clique_active.append(True)
            net.active_ids.append(index)
        return net

    # [LINE MAP]
    # [Associa cada item das seções edges e active_cliques à sua linha no arquivo]
    # [ENTRADA: text - conteúdo do arquivo]
    # [SAIDA: LineMap - (seção, índice) -> linha (1-based)]
    # [DEPENDENCIAS: nenhuma]
    def _line_map(self, text: str) -> LineMap:
        line_map: LineMap = {}
        section = None
        counters = {"edges": 0, "active_cliques": 0}
        for number, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if stripped.startswith('"edges"'):
                section = "edges"
                continue
            if stripped.startswith('"active_cliques"'):
                section = "active_cliques"
                continue
            if section == "edges" and stripped.startswith("["):
                line_map[(section, counters[section])] = number
                counters[section] += 1
            elif section == "active_cliques" and stripped.startswith("{"):
                line_map[(section, counters[section])] = number
                counters[section] += 1
            elif stripped.startswith("]"):
                section = None
        return line_map

    def _schema_errors(self, error: PydanticValidationError, line_map: LineMap):
        errors = {}
        for item in error.errors():
            location = item["loc"]
            field = ".".join(str(part) for part in location) or "general"
            if len(location) >= 2 and (location[0], location[1]) in line_map:
                field = f"line {line_map[(location[0], location[1])]}"
            errors.setdefault(field, []).append(item["msg"])
        return errors

    def _join_items(self, items: List[str]) -> List[str]:
        return [item + ("," if index < len(items) - 1 else "") for index, item in enumerate(items)]
