"""Serve the API with the host and port from config/server.yaml: ``python -m api``."""

import uvicorn

from config import get_config


def main() -> None:
    server = get_config("server").get("server", {})
    uvicorn.run(
        "api.main:app",
        host=str(server.get("host", "127.0.0.1")),
        port=int(server.get("port", 8000)),
        workers=int(server.get("workers", 1)),
        reload=bool(server.get("reload", False)),
    )


if __name__ == "__main__":
    main()
