import java.sql.*;

public class BindParam {
    public void bindParam(PreparedStatement ps,
        int parameterIndex, String value) throws SQLException {
        ps.setString(parameterIndex, value);
    }
}
