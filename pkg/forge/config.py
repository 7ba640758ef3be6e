import os
import sys
import yaml
import logging
import logging.handlers


class Config:

    threads = 4
    log_folder = None
    log_file = "forge.log"
    log_level = "INFO"
    output_folder = "output"
    seed = 0

    max_faces_exact = 100_000
    max_partition_candidates = 1_000_000_000
    max_map_candidates = 5_000_000
    max_config_space_labels = 2_000_000

    @staticmethod
    def configure_loggers():
        forge_logger = logging.getLogger("forge")
        forge_logger.setLevel(logging.DEBUG)
        for handler in list(forge_logger.handlers):
            forge_logger.removeHandler(handler)

        formatter = logging.Formatter(fmt='[%(asctime)s] [%(levelname)s] %(name)s: %(message)s', datefmt='%d-%m-%Y %H:%M:%S')

        stream_handler = logging.StreamHandler()
        stream_handler.setLevel(Config.log_level)
        stream_handler.setFormatter(formatter)
        forge_logger.addHandler(stream_handler)

        if Config.log_folder:
            os.makedirs(Config.log_folder, exist_ok=True)
            file_handler = logging.handlers.RotatingFileHandler(
                os.path.join(Config.log_folder, Config.log_file), mode='a', maxBytes=5_000_000, backupCount=2)
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            forge_logger.addHandler(file_handler)

        # Log uncaught exceptions
        def handle_exception(exc_type, exc_value, exc_traceback):
            if issubclass(exc_type, KeyboardInterrupt):
                sys.__excepthook__(exc_type, exc_value, exc_traceback)
                return
            forge_logger.critical("Uncaught exception", exc_info=(exc_type, exc_value, exc_traceback))

        sys.excepthook = handle_exception

        forge_logger.debug("Loggers initialized")

    @staticmethod
    def load_config(yaml_path: str = None):
        if yaml_path is None:
            curr_dir = os.path.dirname(os.path.realpath(__file__))
            yaml_path = os.path.join(os.path.dirname(curr_dir), "config.yaml")
        if os.path.isfile(yaml_path):
            with open(yaml_path, 'r') as file:
                config = yaml.safe_load(file) or {}
        else:
            config = {}

        Config.threads = int(config.get("threads", Config.threads))
        Config.seed = int(config.get("random", {}).get("seed", Config.seed))
        Config.output_folder = config.get("output", {}).get("folder", Config.output_folder)

        logs = config.get("logs", {})
        if logs:
            for attribute in ["folder", "level", "file"]:
                if attribute not in logs:
                    Config.raise_config_error("logs.%s" % attribute)
            Config.log_folder = os.path.expanduser(logs["folder"]) if logs["folder"] else None
            Config.log_level = str(logs["level"]).upper()
            Config.log_file = logs["file"]

        for attribute, value in config.get("limits", {}).items():
            if not attribute.startswith("max_") or not hasattr(Config, attribute):
                Config.raise_config_error("limits.%s" % attribute)
            setattr(Config, attribute, int(value))

        Config.apply_environment()

    @staticmethod
    def apply_environment():
        threads = os.getenv("FORGE_THREADS")
        if threads:
            if not threads.isdigit() or int(threads) < 1:
                raise AttributeError("FORGE_THREADS should be a positive integer, got '%s'" % threads)
            Config.threads = int(threads)

    @staticmethod
    def check_limit(name: str, requested: int):
        bound = getattr(Config, name)
        if requested > bound:
            raise ResourceLimitError(name, bound, requested)

    @staticmethod
    def raise_config_error(attribute_name):
        raise AttributeError("No configuration found for %s" % attribute_name)


class ResourceLimitError(Exception):

    def __init__(self, limit: str, bound: int, requested: int):
        super().__init__(f"Resource limit '{limit}' exceeded: requested {requested}, bound {bound}")
        self.limit = limit
        self.bound = bound
        self.requested = requested
