import json
import logging
import typing
from fractions import Fraction

import yaml

from ..core.errors import ConfigError, LSCrystalError
from . import constants
from .affine_type import AffineType
from .weight import DominantShape

logger = logging.getLogger(__name__)


class RunConfig:
    kFields = [
        "type_label",
        "shape",
        "depth",
        "cap",
        "n_max",
        "n_bound",
        "samples",
        "seed",
        "output_format",
        "output_path",
        "threads",
        "log_level",
    ]

    def __init__(self,
                 type_label: str = None,
                 shape: str = None,
                 depth: int = None,
                 cap: int = constants.DEFAULT_CAP,
                 n_max: int = constants.DEFAULT_N_MAX,
                 n_bound: typing.Optional[str] = None,
                 samples: int = constants.DEFAULT_SAMPLES,
                 seed: int = constants.DEFAULT_SEED,
                 output_format: str = constants.FORMAT_JSON,
                 output_path: str = None,
                 threads: int = None,
                 log_level: str = "INFO"):
        self.type_label = type_label
        self.shape = shape

        self.depth = depth
        self.cap = cap
        self.n_max = n_max
        self.n_bound = n_bound
        self.samples = samples
        self.seed = seed

        self.output_format = output_format
        self.output_path = output_path

        self.threads = threads
        self.log_level = log_level

    @classmethod
    def load_yaml(cls, path: str) -> typing.Dict[str, typing.Any]:
        try:
            with open(path, 'r') as f:
                data = yaml.safe_load(f)
        except OSError as e:
            raise ConfigError("config file not readable. [path={}] [error={}]".format(path, e))
        except yaml.YAMLError as e:
            raise ConfigError("config file is not valid yaml. [path={}] [error={}]".format(path, e))

        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ConfigError("config file must hold a mapping. [path={}]".format(path))

        unknown = [k for k in data.keys() if k not in cls.kFields]
        if len(unknown) > 0:
            raise ConfigError("unknown config keys. [path={}] [keys={}]".format(path, unknown))

        return data

    @classmethod
    def build(cls, overrides: typing.Dict[str, typing.Any], config_path: str = None) -> "RunConfig":
        c = cls()

        if config_path is not None:
            for k, v in cls.load_yaml(config_path).items():
                setattr(c, k, v)
            logger.info("config loaded. [path={}]".format(config_path))

        for k, v in overrides.items():
            if k in cls.kFields and v is not None:
                setattr(c, k, v)

        return c

    @property
    def affine_type(self) -> AffineType:
        if self.type_label is None:
            raise ConfigError("missing affine type. [flag=--type]")
        try:
            return AffineType.parse(str(self.type_label))
        except LSCrystalError as e:
            raise ConfigError(str(e))

    @property
    def rank(self) -> int:
        return self.affine_type.rank

    @property
    def dominant_shape(self) -> DominantShape:
        if self.shape is None:
            raise ConfigError("missing shape. [flag=--shape]")
        try:
            s = DominantShape.parse(str(self.shape))
        except LSCrystalError as e:
            raise ConfigError(str(e))
        if s.rank != self.rank:
            raise ConfigError("shape length does not match rank. [shape={}] [rank={}]".format(self.shape, self.rank))
        return s

    def validate(self, need_shape: bool = True) -> "RunConfig":
        from ..algebra.affine_data import build_datum

        try:
            build_datum(self.affine_type)
        except ConfigError:
            raise
        except LSCrystalError as e:
            raise ConfigError(str(e))

        if need_shape:
            self.dominant_shape

        for name in ["depth", "cap", "n_max", "samples", "threads"]:
            value = getattr(self, name)
            if value is None:
                continue
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ConfigError("option must be a nonnegative integer. [{}={}]".format(name, value))

        if self.cap is not None and self.cap == 0:
            raise ConfigError("cap must be positive. [cap=0]")

        if self.n_bound is not None:
            try:
                bound = Fraction(str(self.n_bound))
            except (ValueError, ZeroDivisionError):
                raise ConfigError("n_bound must be rational. [n_bound={}]".format(self.n_bound))
            if bound < 0:
                raise ConfigError("n_bound must be nonnegative. [n_bound={}]".format(self.n_bound))

        if not isinstance(self.seed, int):
            raise ConfigError("seed must be an integer. [seed={}]".format(self.seed))

        if self.output_format not in constants.EXPORT_FORMATS:
            raise ConfigError("unknown output format. [format={}]".format(self.output_format))

        return self

    @property
    def get_dict(self):
        obj = {}
        for k in self.kFields:
            v = getattr(self, k)
            if v is not None:
                obj[k] = v
        return obj

    @property
    def get_json(self):
        return json.dumps(self.get_dict)
