from utils.logging import get_logger
from utils.json_utils import dumps_canonical, save_json
