from .env_var import env_kind, read_env, write_env
from .log_utils import logger
from .cost_util import cost_time
from .options import (
    SearchOptions,
    SamplingOptions,
    HarnessOptions,
    CghkitConfig,
    cghkit_config,
)
