import datetime
import os
import uuid
from collections.abc import Mapping

import hydra
from cyy_naive_lib.log import get_logger, set_file_handler
from omegaconf import DictConfig, OmegaConf

SHIPPED_CORPUS = os.path.join(os.path.dirname(os.path.realpath(__file__)), "corpus")


class VerificationConfig:
    def __init__(self) -> None:
        self.command: str | None = None
        self.graph: str | None = None
        # a cover file, "straight" or "random"
        self.cover: str = "straight"
        self.boundary: str | None = None
        self.shape: str | None = None
        self.corpus_dir: str | None = None
        self.m: int = 1
        self.seed: int = 0
        self.budget_sec: float = 60
        self.max_vertices: int | None = None
        self.out: str | None = None
        self.strict: bool = False
        self.parallel_number: int = 1
        self.log_level: str = "INFO"
        self.save_log: bool = False
        self.log_file: str | None = None
        self.ledger_dir: str | None = None
        self.gen_kwargs: dict = {}
        self.sweep_kwargs: dict = {}

    def load_config_from_file(self, conf: Mapping | DictConfig) -> None:
        if isinstance(conf, DictConfig):
            conf = OmegaConf.to_container(conf, resolve=True)
        for key, value in conf.items():
            if not hasattr(self, key):
                raise RuntimeError(f"unknown config key {key}")
            setattr(self, key, value)
        if self.m < 1:
            raise RuntimeError(f"m must be positive, got {self.m}")
        if self.budget_sec <= 0:
            raise RuntimeError(f"budget_sec must be positive, got {self.budget_sec}")
        if self.parallel_number < 1:
            raise RuntimeError(
                f"parallel_number must be positive, got {self.parallel_number}"
            )
        if self.corpus_dir is None:
            self.corpus_dir = os.getenv("DPCOLOR_CORPUS", SHIPPED_CORPUS)
        if self.save_log and self.log_file is None:
            date_time = "{date:%Y-%m-%d_%H_%M_%S}".format(date=datetime.datetime.now())
            self.log_file = (
                os.path.join("log", self.command or "dpcolor", date_time, str(uuid.uuid4()))
                + ".log"
            )

    def apply_global_config(self) -> None:
        get_logger().setLevel(self.log_level)
        if self.log_file is not None:
            set_file_handler(self.log_file)


global_config: VerificationConfig = VerificationConfig()


@hydra.main(config_path="conf", version_base=None)
def load_config(conf) -> None:
    # one config group per command
    conf = next(iter(conf.values()))
    global_config.load_config_from_file(conf)
