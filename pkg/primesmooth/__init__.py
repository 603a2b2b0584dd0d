from loguru import logger

logger.disable('primesmooth')
