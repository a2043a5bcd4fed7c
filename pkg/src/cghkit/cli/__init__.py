from .config import RunConfig, SchemaError
from .main import build_parser, config_from_args, run, main
