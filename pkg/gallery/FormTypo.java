import java.sql.*;

public class FormTypo {
    public void run(Connection conn) throws SQLException {
        Statement stmt = conn.createStatement();
        stmt.executeQuery("SELECT * FORM warehouse");
    }
}
