import csv
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

from pydantic import BaseModel

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

SVG_SIZE = 500
SVG_MARGIN = 50
_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


# [FORMAT CELL]
# [Formata uma célula de CSV: floats com 17 dígitos significativos, None como vazio]
# [ENTRADA: value - valor da célula]
# [SAIDA: str]
# [DEPENDENCIAS: nenhuma]
def format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


# [REPORT REPOSITORY]
# [Escrita de tabelas CSV determinísticas, documentos JSON e polilinhas SVG]
# [ENTRADA: nenhuma]
# [SAIDA: instância ReportRepository]
# [DEPENDENCIAS: csv, pydantic.BaseModel]
class ReportRepository:

    # [WRITE CSV]
    # [Grava cabeçalho e linhas com número constante de colunas]
    # [ENTRADA: path - destino, header - nomes das colunas, rows - linhas de valores]
    # [SAIDA: None - arquivo gravado]
    # [DEPENDENCIAS: csv.writer, format_cell]
    def write_csv(self, path: PathLike, header: Sequence[str], rows: Iterable[Sequence[Any]]):
        with open(path, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                if len(row) != len(header):
                    raise ValueError(f"row has {len(row)} columns, header has {len(header)}")
                writer.writerow([format_cell(value) for value in row])
        logger.info(f"Wrote {path}")

    # [WRITE MODEL]
    # [Grava um modelo pydantic como JSON indentado]
    # [ENTRADA: path - destino, model - BaseModel]
    # [SAIDA: None - arquivo gravado]
    # [DEPENDENCIAS: model_dump_json]
    def write_model(self, path: PathLike, model: BaseModel):
        Path(path).write_text(model.model_dump_json(indent=2) + "\n", encoding="utf-8")
        logger.info(f"Wrote {path}")

    # [WRITE LORENZ SVG]
    # [Desenha uma polilinha por curva no quadrado unitário mais a diagonal de igualdade]
    # [ENTRADA: path - destino, curves - nome -> pontos (x, y) em [0, 1]²]
    # [SAIDA: None - arquivo SVG gravado]
    # [DEPENDENCIAS: self._polyline]
    def write_lorenz_svg(self, path: PathLike, curves: Dict[str, List[Tuple[float, float]]]):
        span = SVG_SIZE - 2 * SVG_MARGIN
        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
            f'  <rect x="{SVG_MARGIN}" y="{SVG_MARGIN}" width="{span}" height="{span}" fill="none" stroke="#999999"/>',
            self._polyline("equality", [(0.0, 0.0), (1.0, 1.0)], "#000000", dashed=True),
        ]
        for index, (name, points) in enumerate(curves.items()):
            parts.append(self._polyline(name, points, _PALETTE[index % len(_PALETTE)]))
        parts.append("</svg>")
        Path(path).write_text("\n".join(parts) + "\n", encoding="utf-8")
        logger.info(f"Wrote {path} with {len(curves)} curve(s)")

    def _polyline(self, name: str, points: Sequence[Tuple[float, float]], color: str, dashed: bool = False) -> str:
        span = SVG_SIZE - 2 * SVG_MARGIN
        coordinates = " ".join(
            f"{SVG_MARGIN + span * x:.4f},{SVG_SIZE - SVG_MARGIN - span * y:.4f}" for x, y in points
        )
        dash = ' stroke-dasharray="6,4"' if dashed else ""
        return f'  <polyline id="{name}" fill="none" stroke="{color}" stroke-width="1.5"{dash} points="{coordinates}"/>'
