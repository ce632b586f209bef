"""
ATM location table: CSV ingestion and the brute-force nearest-location oracle
"""

import csv
from pathlib import Path

from pydantic import ValidationError

from vcloud.vcloud_mpc.schemas.params_schemas import AtmLocation
from vcloud.vcloud_mpc.utils.errors import ParameterError, throw

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
ATM_LOCATIONS_CSV = DATA_DIR / "atm_locations.csv"


def load_atm_locations(path: str | Path | None = None) -> list[AtmLocation]:
    """Rows of a ``name,east,south`` CSV; the bundled downtown table when no path is given"""
    path = Path(path) if path else ATM_LOCATIONS_CSV
    locations = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or {"name", "east", "south"} - set(reader.fieldnames):
            throw(f"{path}: expected columns name,east,south", ParameterError)
        for line_no, row in enumerate(reader, start=2):
            try:
                locations.append(AtmLocation(name=row["name"], east=row["east"], south=row["south"]))
            except ValidationError as e:
                throw(f"{path}:{line_no}: {e.errors()[0]['msg']}", ParameterError)
    return locations


def manhattan_distance(east_a: int, south_a: int, east_b: int, south_b: int) -> int:
    return abs(east_a - east_b) + abs(south_a - south_b)


def nearest_atm_oracle(locations: list[AtmLocation], east: int, south: int) -> tuple[int, int]:
    """(position in ``locations``, distance) of the nearest location, earliest row on ties"""
    distances = [manhattan_distance(east, south, loc.east, loc.south) for loc in locations]
    best = min(range(len(locations)), key=lambda i: (distances[i], i))
    return best, distances[best]


def find_location(locations: list[AtmLocation], east: int, south: int) -> AtmLocation | None:
    for location in locations:
        if (location.east, location.south) == (east, south):
            return location
    return None
