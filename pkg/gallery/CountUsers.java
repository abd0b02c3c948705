import java.sql.*;

public class CountUsers {
    public int count(Connection conn) throws SQLException {
        Statement statement = conn.createStatement();
        String sql = "select count(*) from USERS";
        ResultSet resultSet = statement.executeQuery(sql);
        resultSet.next();
        int result = resultSet.getInt(1);
        return result;
    }
}
