from pydantic import BaseModel, ConfigDict


class FrozenModel(BaseModel):
    """Immutable value type shared by every resource."""

    model_config = ConfigDict(frozen=True)


class ReportHeader(FrozenModel):
    tool: str = 'heegaard-lift'
    tool_version: str
    report_version: str

    @classmethod
    def create(cls, tool_version: str, report_version: str):
        return cls(tool_version=tool_version, report_version=report_version)

    def line(self) -> str:
        return (
            f'{self.tool} {self.tool_version} report v{self.report_version}'
        )
